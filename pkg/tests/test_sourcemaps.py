"""Source-map ground truth and CDN URL classification."""

import base64
import json

import pytest

from bundlescope.errors import FormatError
from bundlescope.sourcemaps import (extract_ground_truth, extract_packages,
                                    extract_pnpm_versions, parse_cdn_url,
                                    parse_source_map)
from bundlescope.semver import parse_semver


def summary_of(sources):
    return parse_source_map(json.dumps({"version": 3, "sources": sources}))


class TestParseSourceMap:
    def test_minimal(self):
        s = summary_of(["webpack://app/./src/i.js"])
        assert s.sources == ("webpack://app/./src/i.js",)
        assert not s.has_inline_content

    def test_missing_sources(self):
        with pytest.raises(FormatError):
            parse_source_map('{"version": 3}')

    def test_wrong_version(self):
        with pytest.raises(FormatError):
            parse_source_map('{"version": 2, "sources": []}')

    def test_not_json(self):
        with pytest.raises(FormatError):
            parse_source_map(b"\x00\x01garbage")

    def test_data_uri_round_trip(self):
        doc = json.dumps({"version": 3, "sources": ["a.js"],
                          "sourcesContent": ["x"]})
        uri = "data:application/json;base64," + \
            base64.b64encode(doc.encode()).decode()
        assert parse_source_map(uri) == parse_source_map(doc)
        assert parse_source_map(uri).has_inline_content


class TestExtractPackages:
    def test_plain(self):
        s = summary_of(["webpack:///./node_modules/lodash/index.js"])
        assert extract_packages(s) == {"lodash"}

    def test_scoped(self):
        s = summary_of([".../node_modules/@babel/runtime/helpers/x.js"])
        assert extract_packages(s) == {"@babel/runtime"}

    def test_nested_takes_last(self):
        s = summary_of([".../node_modules/a/node_modules/b/i.js"])
        assert extract_packages(s) == {"b"}

    def test_non_node_modules_ignored(self):
        s = summary_of(["src/app.js", "lib/util.js"])
        assert extract_packages(s) == set()


class TestPnpm:
    def test_plain_package(self):
        s = summary_of(
            ["../node_modules/.pnpm/axios@1.6.2/node_modules/axios/lib/a.js"])
        entries = extract_pnpm_versions(s)
        assert {(e.package, str(e.version)) for e in entries} == \
            {("axios", "1.6.2")}

    def test_scoped_plus_encoding(self):
        s = summary_of([".../node_modules/.pnpm/@vue+shared@3.4.0/"
                        "node_modules/@vue/shared/i.js"])
        entries = extract_pnpm_versions(s)
        assert {(e.package, str(e.version)) for e in entries} == \
            {("@vue/shared", "3.4.0")}

    def test_peer_hash_stripped(self):
        s = summary_of([".../node_modules/.pnpm/react-dom@18.2.0_react@18.2.0"
                        "/node_modules/react-dom/index.js"])
        entries = extract_pnpm_versions(s)
        assert {(e.package, str(e.version)) for e in entries} == \
            {("react-dom", "18.2.0")}

    def test_non_pnpm_skipped(self):
        s = summary_of([".../node_modules/axios/lib/a.js"])
        assert extract_pnpm_versions(s) == set()

    def test_ground_truth_merges(self):
        s = summary_of([
            ".../node_modules/.pnpm/axios@1.6.2/node_modules/axios/a.js",
            ".../node_modules/lodash/index.js",
        ])
        entries = extract_ground_truth(s)
        by_name = {e.package: e for e in entries}
        assert by_name["axios"].version == parse_semver("1.6.2")
        assert by_name["axios"].evidence == "pnpm-store-path"
        assert by_name["lodash"].version is None
        assert by_name["lodash"].evidence == "node-modules-path"
        # invariant: version present iff pnpm evidence
        for e in entries:
            assert (e.version is not None) == \
                (e.evidence == "pnpm-store-path")


class TestCdnUrls:
    def test_jsdelivr_fixed(self):
        info = parse_cdn_url(
            "https://cdn.jsdelivr.net/npm/vue@3.4.0/dist/vue.js")
        assert (info.provider, info.package) == ("jsdelivr", "vue")
        assert info.version_kind == "fixed"
        assert info.version == parse_semver("3.4.0")
        assert info.file == "dist/vue.js"

    def test_jsdelivr_aliased(self):
        info = parse_cdn_url(
            "https://cdn.jsdelivr.net/npm/vue@3/dist/vue.js")
        assert info.version_kind == "aliased"
        assert info.version_text == "3"

    def test_unpkg_scoped(self):
        info = parse_cdn_url(
            "https://unpkg.com/@scope/pkg@1.2.3/dist/index.js")
        assert (info.provider, info.package) == ("unpkg", "@scope/pkg")
        assert info.version == parse_semver("1.2.3")

    def test_unpkg_latest_tag(self):
        info = parse_cdn_url("https://unpkg.com/react@latest/umd/react.js")
        assert info.version_kind == "aliased"
        assert info.version_text == "latest"

    def test_unpkg_no_version(self):
        info = parse_cdn_url("https://unpkg.com/lodash/lodash.js")
        assert info.version_kind == "none"

    def test_cdnjs(self):
        info = parse_cdn_url("https://cdnjs.cloudflare.com/ajax/libs/"
                             "jquery/3.7.1/jquery.min.js")
        assert (info.provider, info.package) == ("cdnjs", "jquery")
        assert info.version == parse_semver("3.7.1")

    def test_google(self):
        info = parse_cdn_url("https://ajax.googleapis.com/ajax/libs/"
                             "jquery/3.6.0/jquery.min.js")
        assert (info.provider, info.package) == ("google", "jquery")
        assert info.version == parse_semver("3.6.0")

    def test_jquery_host(self):
        info = parse_cdn_url("https://code.jquery.com/jquery-3.7.1.min.js")
        assert (info.provider, info.package) == ("jquery", "jquery")
        assert info.version == parse_semver("3.7.1")

    def test_unknown_host(self):
        info = parse_cdn_url("https://example.com/app.js")
        assert info.provider == "other"
        assert info.version_kind == "none"

    def test_partition_invariant(self):
        urls = [
            "https://cdn.jsdelivr.net/npm/vue@3.4.0/dist/vue.js",
            "https://cdn.jsdelivr.net/npm/vue@3/dist/vue.js",
            "https://unpkg.com/lodash/lodash.js",
            "https://example.com/app.js",
            "https://code.jquery.com/jquery-3.7.1.min.js",
        ]
        for url in urls:
            info = parse_cdn_url(url)
            states = [info.version_kind == "fixed",
                      info.version_kind == "aliased",
                      info.version_kind == "none"]
            assert sum(states) == 1
            assert (info.version is not None) == (info.version_kind ==
                                                  "fixed")
            assert (info.version_text is not None) == (info.version_kind ==
                                                       "aliased")
