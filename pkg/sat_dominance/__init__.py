from sat_dominance import application, domain, infrastructure
from sat_dominance.settings import settings

__all__ = ["settings", "application", "domain", "infrastructure"]
