"""Exact local models of triple covers and their small resolutions."""

from ._core import Cover, TricoverError, cone_census, run_cli

__all__ = ["Cover", "TricoverError", "cone_census", "run_cli"]
