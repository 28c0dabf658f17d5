import json
from pathlib import Path

import pytest

from bundlescope.fingerprint import FingerprintParams

# small parameters keep toy fixtures above the k-gram floor
SMALL_PARAMS = FingerprintParams(k=8, w=4)


def make_artifact(root: Path, name: str, files: dict,
                  manifest: dict | None = None) -> Path:
    """Write an unpacked npm artifact: package.json plus source files."""
    directory = root / name.replace("/", "__")
    directory.mkdir(parents=True, exist_ok=True)
    doc = {"name": name, "version": "0.0.0"}
    if manifest:
        doc.update(manifest)
    (directory / "package.json").write_text(json.dumps(doc))
    for relative, body in files.items():
        target = directory / relative
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(body)
    return directory


@pytest.fixture
def small_params():
    return SMALL_PARAMS
