from fsigcalc.cli.main import cli

__all__ = ["cli"]
