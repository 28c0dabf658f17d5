"""Regenerate the bundled bundler fingerprint file from the preamble
snippets shipped alongside it.

Each pattern is the token type sequence of one characteristic runtime
preamble, minus the leading Program token so it can occur inside a
larger document.
"""

from pathlib import Path

from bundlescope.bundler_id import (BundlerFingerprint,
                                    DEFAULT_FINGERPRINT_FILE,
                                    save_fingerprint_file)
from bundlescope.jsparse import parse_auto
from bundlescope.tokens import flatten

PREAMBLE_DIR = DEFAULT_FINGERPRINT_FILE.parent / "preambles"


def main():
    fingerprints = []
    for path in sorted(PREAMBLE_DIR.glob("*.js")):
        tokens = flatten(parse_auto(path.read_text()))[1:]
        fingerprints.append(BundlerFingerprint(
            bundler=path.stem, pattern=tuple(tokens),
            fingerprint_source=f"preambles/{path.name}"))
    # a pattern that is a substring of another would shadow it
    for a in fingerprints:
        for b in fingerprints:
            if a is not b:
                seq_a = ",".join(map(str, a.pattern))
                seq_b = ",".join(map(str, b.pattern))
                assert seq_a not in seq_b, (a.bundler, b.bundler)
    save_fingerprint_file(fingerprints, DEFAULT_FINGERPRINT_FILE)
    print(f"wrote {len(fingerprints)} fingerprints to "
          f"{DEFAULT_FINGERPRINT_FILE}")


if __name__ == "__main__":
    main()
