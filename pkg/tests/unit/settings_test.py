from loguru import logger

from sat_dominance.settings import Settings


def test_load_settings_logs_its_source() -> None:
    messages: list[str] = []
    sink_id = logger.add(lambda message: messages.append(message.record["message"]), level="INFO")
    try:
        loaded = Settings.load_settings()
    finally:
        logger.remove(sink_id)

    assert "Loading settings from the environment and the '.env' file." in messages
    assert isinstance(loaded, Settings)
