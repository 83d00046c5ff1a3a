from . import files_io

__all__ = ["files_io"]
