"""JavaScript parsing, code generation, and AST utilities."""

from bundlescope.jsparse.codegen import generate
from bundlescope.jsparse.parser import parse, parse_auto

__all__ = ["parse", "parse_auto", "generate"]
