"""bundlescope: detect npm package versions compiled into JavaScript bundles.

Fingerprints package release artifacts with winnowed k-grams over AST
token types and compares them against observed bundles.
"""

__version__ = "0.1.0"
