import csv
import json
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

from sat_dominance.application.dimacs import parse_dimacs, write_dimacs
from sat_dominance.domain.formula import CnfFormula, ParsedFormula


def _prepare(filename: str | Path) -> Path:
    file_path = Path(filename).resolve().absolute()
    file_path.parent.mkdir(parents=True, exist_ok=True)

    return file_path


class JsonFileManager:
    @classmethod
    def read(cls, filename: str | Path) -> list | dict:
        file_path: Path = Path(filename)

        try:
            with file_path.open("r", encoding="utf-8") as file:
                return json.load(file)
        except FileNotFoundError:
            raise FileNotFoundError(f"File '{file_path=}' does not exist.") from None
        except json.JSONDecodeError as e:
            raise json.JSONDecodeError(
                msg=f"File '{file_path=}' is not properly formatted as JSON.",
                doc=e.doc,
                pos=e.pos,
            ) from None

    @classmethod
    def write(cls, filename: str | Path, data: list | dict) -> Path:
        file_path = _prepare(filename)

        with file_path.open("w", encoding="utf-8") as file:
            json.dump(data, file, indent=4)

        return file_path


class DimacsFileManager:
    @classmethod
    def read(cls, filename: str | Path) -> ParsedFormula:
        file_path: Path = Path(filename)

        try:
            return parse_dimacs(file_path.read_bytes())
        except FileNotFoundError:
            raise FileNotFoundError(f"File '{file_path=}' does not exist.") from None

    @classmethod
    def write(cls, filename: str | Path, formula: CnfFormula) -> Path:
        file_path = _prepare(filename)
        file_path.write_bytes(write_dimacs(formula))

        return file_path


class CsvFileManager:
    @classmethod
    def read(cls, filename: str | Path) -> list[dict[str, str]]:
        file_path: Path = Path(filename)

        try:
            with file_path.open("r", encoding="utf-8", newline="") as file:
                return list(csv.DictReader(file))
        except FileNotFoundError:
            raise FileNotFoundError(f"File '{file_path=}' does not exist.") from None

    @classmethod
    def write(cls, filename: str | Path, columns: Sequence[str], rows: Iterable[dict[str, str]]) -> Path:
        file_path = _prepare(filename)

        with file_path.open("w", encoding="utf-8", newline="") as file:
            cls.write_stream(file, columns, rows)

        return file_path

    @classmethod
    def write_stream(cls, stream: TextIO, columns: Sequence[str], rows: Iterable[dict[str, str]]) -> None:
        writer = csv.DictWriter(stream, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
