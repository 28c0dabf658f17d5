"""Artifact file selection: strategy precedence, resolution, heuristics."""

import io
import tarfile

import pytest

from bundlescope.errors import SelectionError
from bundlescope.select import (STRATEGY_ENTRYPOINT, STRATEGY_HEURISTIC,
                                STRATEGY_PREBUNDLED, resolve_specifier,
                                select_files, unpack_artifact)

from conftest import make_artifact


class TestPrebundled:
    def test_unpkg_field(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"dist/lib.min.js": "x=1;"},
                             {"unpkg": "dist/lib.min.js"})
        result = select_files(root)
        assert result.files == ["dist/lib.min.js"]
        assert result.strategy == STRATEGY_PREBUNDLED

    def test_jsdelivr_preferred_over_entrypoints(self, tmp_path):
        root = make_artifact(tmp_path, "p",
                             {"bundle.js": "x=1;", "index.js": "y=2;"},
                             {"jsdelivr": "bundle.js", "main": "index.js"})
        result = select_files(root)
        assert result.files == ["bundle.js"]

    def test_missing_prebundled_file_falls_through(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"index.js": "x=1;"},
                             {"unpkg": "gone.js"})
        assert select_files(root).strategy == STRATEGY_ENTRYPOINT


class TestEntrypoints:
    def test_main_with_relative_import(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "lib/a.js": "var b = require('./b'); module.exports = b;",
            "lib/b.js": "module.exports = 2;",
        }, {"main": "lib/a.js"})
        result = select_files(root)
        assert result.files == ["lib/a.js", "lib/b.js"]
        assert result.strategy == STRATEGY_ENTRYPOINT

    def test_external_imports_recorded_not_followed(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "index.js": "var _ = require('lodash'); "
                        "var s = require('@scope/thing/sub');",
        }, {"main": "index.js"})
        result = select_files(root)
        assert result.files == ["index.js"]
        assert result.dependencies == {"lodash", "@scope/thing"}

    def test_module_field_preferred(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "esm.mjs": "export default 1;",
            "cjs.js": "module.exports = 1;",
        }, {"module": "esm.mjs", "main": "cjs.js"})
        result = select_files(root)
        assert result.files[0] == "esm.mjs"

    def test_extension_completion_order(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "index.js": "var u = require('./util'); module.exports = u;",
            "util.mjs": "export default 3;",
        }, {"main": "index.js"})
        result = select_files(root)
        assert result.files == ["index.js", "util.mjs"]

    def test_directory_index_resolution(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "index.js": "module.exports = require('./sub');",
            "sub/index.js": "module.exports = 4;",
        }, {"main": "index.js"})
        assert select_files(root).files == ["index.js", "sub/index.js"]

    def test_default_index_without_fields(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"index.js": "x = 1;"})
        result = select_files(root)
        assert result.files == ["index.js"]
        assert result.strategy == STRATEGY_ENTRYPOINT

    def test_dynamic_import_followed(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "index.js": "import('./lazy.js');",
            "lazy.js": "export default 9;",
        }, {"main": "index.js"})
        assert select_files(root).files == ["index.js", "lazy.js"]

    def test_depth_first_preorder(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "index.js": "require('./a'); require('./c');",
            "a.js": "require('./b');",
            "b.js": "x = 1;",
            "c.js": "y = 2;",
        }, {"main": "index.js"})
        assert select_files(root).files == \
            ["index.js", "a.js", "b.js", "c.js"]


class TestExportsMap:
    def test_condition_precedence(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "esm/i.js": "export default 1;",
            "cjs/i.js": "module.exports = 1;",
        }, {"exports": {".": {"import": "./esm/i.js",
                              "require": "./cjs/i.js"}}})
        result = select_files(root)
        assert result.files[0] == "esm/i.js"

    def test_browser_condition_first(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "browser.js": "x = 1;",
            "esm.js": "export default 1;",
        }, {"exports": {".": {"browser": "./browser.js",
                              "import": "./esm.js"}}})
        assert select_files(root).files[0] == "browser.js"

    def test_subpath_export_resolution(self, tmp_path):
        manifest = {"name": "p",
                    "exports": {".": "./index.js",
                                "./helper": "./lib/helper.js"}}
        root = make_artifact(tmp_path, "p", {
            "index.js": "require('p/helper');",
            "lib/helper.js": "x = 1;",
        }, manifest)
        assert select_files(root).files == ["index.js", "lib/helper.js"]


class TestResolveSpecifier:
    def test_relative(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"util.js": "x=1;",
                                             "index.js": "y=2;"})
        kind, path = resolve_specifier("index.js", "./util", {}, root)
        assert (kind, path) == ("internal", "util.js")

    def test_bare_external(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"index.js": "x=1;"})
        kind, path = resolve_specifier("index.js", "lodash", {}, root)
        assert (kind, path) == ("external", None)

    def test_unresolved(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"index.js": "x=1;"})
        kind, path = resolve_specifier("index.js", "./missing", {}, root)
        assert (kind, path) == ("unresolved", None)


class TestHeuristic:
    def test_excluded_directories(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "src/x.js": "x = 1;",
            "test/x.test.js": "t();",
            "TESTS/y.js": "t();",
            "examples/demo.js": "d();",
            "vendor/three.js": "v();",
            "node_modules/dep/i.js": "n();",
        }, {"main": "does-not-exist.js"})
        result = select_files(root)
        assert result.files == ["src/x.js"]
        assert result.strategy == STRATEGY_HEURISTIC

    def test_min_sibling_dropped(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "lib.js": "x = 1;",
            "lib.min.js": "x=1;",
            "only.min.js": "y=2;",
        }, {"main": "nope.js"})
        result = select_files(root)
        assert result.files == ["lib.js", "only.min.js"]

    def test_typescript_only(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"src/a.ts": "let x = 1;"},
                             {"main": "nope.js"})
        with pytest.raises(SelectionError) as info:
            select_files(root)
        assert info.value.reason == "typescript-only"

    def test_no_sources(self, tmp_path):
        root = make_artifact(tmp_path, "p", {"README.md": "hi"},
                             {"main": "nope.js"})
        with pytest.raises(SelectionError) as info:
            select_files(root)
        assert info.value.reason == "no-source-files"


class TestErrors:
    def test_missing_package_json(self, tmp_path):
        directory = tmp_path / "bare"
        directory.mkdir()
        (directory / "index.js").write_text("x=1;")
        with pytest.raises(SelectionError):
            select_files(directory)

    def test_determinism(self, tmp_path):
        root = make_artifact(tmp_path, "p", {
            "a.js": "x=1;", "b.js": "y=2;", "c.js": "z=3;",
        }, {"main": "nope.js"})
        assert select_files(root).files == select_files(root).files


class TestUnpack:
    def test_strips_package_prefix(self, tmp_path):
        tarball = tmp_path / "art.tgz"
        with tarfile.open(tarball, "w:gz") as archive:
            for name, body in [("package/package.json", b"{}"),
                               ("package/index.js", b"x=1;")]:
                info = tarfile.TarInfo(name)
                info.size = len(body)
                archive.addfile(info, io.BytesIO(body))
        out = unpack_artifact(tarball, tmp_path / "out")
        assert (out / "package.json").read_text() == "{}"
        assert (out / "index.js").read_text() == "x=1;"
