"""Version detector: closed-loop behavior, thresholds, robustness."""

import pytest

from bundlescope.detect import (DetectionConfig, detect, rank_versions,
                                report_to_dict, retained_versions)
from bundlescope.errors import UnknownPackage
from bundlescope.fingerprint import fingerprint
from bundlescope.index import PackageIndex, index_add
from bundlescope.normalize import normalize
from bundlescope.pseudobundle import pseudo_bundle
from bundlescope.semver import parse_semver
from bundlescope.tokens import tokenize

from conftest import SMALL_PARAMS, make_artifact

# three versions that modify existing statements and add new ones, so
# no version's fingerprint set is a subset of another's
CLAMP_OLD = ("function clamp(v, lo, hi) { if (v < lo) return lo; "
             "if (v > hi) return hi; return v; }\n")
CLAMP_NEW = ("function clamp(v, lo, hi) { "
             "return Math.min(Math.max(v, lo), hi); }\n")
TIMES_OLD = ("function times(n, fn) { var out = []; "
             "for (var i = 0; i < n; i++) { out.push(fn(i)); } "
             "return out; }\n")
TIMES_NEW = ("function times(n, fn) { "
             "return Array.from({ length: n }, function (_, i) "
             "{ return fn(i); }); }\n")
SUM = ("function sum(xs) { var s = 0; "
       "for (var i = 0; i < xs.length; i++) { s += xs[i]; } return s; }\n")
MEAN = ("function mean(xs) { return sum(xs) / xs.length; }\n"
        "function spread(xs) { return Math.max.apply(null, xs) - "
        "Math.min.apply(null, xs); }\n")
MEDIAN = ("function median(xs) { var s = xs.slice().sort(); "
          "return s[Math.floor(s.length / 2)]; }\n"
          "function mode(xs) { var seen = {}; var best = xs[0]; "
          "for (var i = 0; i < xs.length; i++) { "
          "seen[xs[i]] = (seen[xs[i]] || 0) + 1; "
          "if (seen[xs[i]] > seen[best]) best = xs[i]; } return best; }\n")
EXPORTS = "module.exports = { clamp: clamp, times: times, sum: sum };\n"

V1 = CLAMP_OLD + TIMES_OLD + SUM + EXPORTS
V2 = CLAMP_NEW + TIMES_OLD + SUM + MEAN + EXPORTS
V3 = CLAMP_NEW + TIMES_NEW + SUM + MEAN + MEDIAN + EXPORTS

UNRELATED = (
    "function Router(routes) { this.routes = routes; this.stack = []; }\n"
    "Router.prototype.push = function (path) { this.stack.push(path); "
    "var handler = this.routes[path]; if (handler) handler(); };\n"
    "Router.prototype.pop = function () { return this.stack.pop(); };\n"
    "var router = new Router({ home: function () "
    "{ document.title = 'home'; } });\n"
    "router.push('home');\n")


@pytest.fixture
def lab_index(tmp_path):
    index = PackageIndex(params=SMALL_PARAMS)
    for version, body in [("1.2.2", V1), ("1.2.3", V2),
                          ("1.3.0", V3)]:
        art = make_artifact(tmp_path / version, "mathkit",
                            {"index.js": body})
        index_add(index, art, "mathkit", version)
    return index


def bundle_of(body):
    return pseudo_bundle([("index.js", body)]).source


CFG = DetectionConfig(min_shared=5)


class TestClosedLoop:
    def test_true_version_detected(self, lab_index):
        report = detect(bundle_of(V2), lab_index, CFG)
        assert len(report.detections) == 1
        detection = report.detections[0]
        assert detection.package == "mathkit"
        assert parse_semver("1.2.3") in detection.versions
        assert detection.similarity >= 0.95

    def test_self_consistency_similarity_one(self, lab_index):
        report = detect(bundle_of(V1), lab_index, CFG)
        assert report.detections[0].similarity == 1.0

    def test_empty_filter_no_detections(self, lab_index):
        report = detect(bundle_of(V1), lab_index, CFG, package_filter=[])
        assert report.detections == []

    def test_filter_excluding_truth(self, lab_index):
        report = detect(bundle_of(V1), lab_index, CFG,
                        package_filter=["other"])
        assert report.detections == []

    def test_identical_fingerprints_make_a_range(self, tmp_path):
        index = PackageIndex(params=SMALL_PARAMS)
        for version in ("1.0.0", "1.0.1"):
            art = make_artifact(tmp_path / version, "same",
                                {"index.js": V1})
            index_add(index, art, "same", version)
        report = detect(bundle_of(V1), index, CFG)
        assert set(report.detections[0].versions) == \
            {parse_semver("1.0.0"), parse_semver("1.0.1")}
        # tie order: descending, overestimate first
        assert report.detections[0].versions[0] == parse_semver("1.0.1")


class TestRankVersions:
    def test_unknown_package(self, lab_index):
        fps = fingerprint(tokenize(normalize(bundle_of(V1))),
                          SMALL_PARAMS)
        with pytest.raises(UnknownPackage):
            rank_versions("ghost", fps, lab_index)

    def test_descending_order(self, lab_index):
        fps = fingerprint(tokenize(normalize(bundle_of(V2))),
                          SMALL_PARAMS)
        ranked = rank_versions("mathkit", fps, lab_index)
        similarities = [s for _, s, _ in ranked]
        assert similarities == sorted(similarities, reverse=True)

    def test_relative_threshold_arithmetic(self):
        ranked = [(parse_semver("3.0.0"), 0.90, 9),
                  (parse_semver("2.0.0"), 0.88, 8),
                  (parse_semver("1.0.0"), 0.40, 4)]
        retained = retained_versions(ranked, 0.9)
        assert [str(v) for v, _, _ in retained] == ["3.0.0", "2.0.0"]

    def test_all_zero_similarities_absent(self):
        ranked = [(parse_semver("1.0.0"), 0.0, 0)]
        assert retained_versions(ranked, 1.0) == []


class TestRobustness:
    def test_first_party_dilution(self, lab_index):
        truth = bundle_of(V2)
        diluted = pseudo_bundle(
            [("index.js", V2),
             ("app1.js", UNRELATED),
             ("app2.js", UNRELATED.replace("Router", "Navigator")
              .replace("router", "navigator"))]).source
        clean = detect(truth, lab_index, CFG)
        noisy = detect(diluted, lab_index, CFG)
        assert noisy.detections, "package lost under dilution"
        assert parse_semver("1.2.3") in noisy.detections[0].versions
        assert clean.detections[0].package == noisy.detections[0].package

    def test_argmax_invariance_under_doubling(self, lab_index):
        source = bundle_of(V2)
        doubled = source + "\n" + source
        one = detect(source, lab_index, CFG)
        two = detect(doubled, lab_index, CFG)
        assert one.detections[0].versions == two.detections[0].versions

    def test_monotonicity_new_package_added(self, lab_index, tmp_path):
        source = bundle_of(V2)
        before = detect(source, lab_index, CFG)
        art = make_artifact(tmp_path / "new", "unrelated",
                            {"index.js": UNRELATED})
        index_add(lab_index, art, "unrelated", "9.9.9")
        after = detect(source, lab_index, CFG)
        assert [(d.package, d.versions) for d in before.detections] == \
            [(d.package, d.versions)
             for d in after.detections if d.package != "unrelated"]


class TestCompartments:
    def test_compartment_mode_not_worse_on_lab_fixture(self, lab_index):
        source = pseudo_bundle(
            [("index.js", V2), ("app.js", UNRELATED)]).source
        whole = detect(source, lab_index, CFG)
        comp = detect(source, lab_index,
                      DetectionConfig(min_shared=5, use_compartments=True))
        assert comp.detections and whole.detections
        assert comp.detections[0].shared >= whole.detections[0].shared
        assert comp.detections[0].compartment_keys is not None
        assert parse_semver("1.2.3") in comp.detections[0].versions

    def test_no_module_map_falls_back(self, lab_index):
        # plain concatenated script, no wrapper array
        report = detect(V2, lab_index,
                        DetectionConfig(min_shared=5,
                                        use_compartments=True))
        assert report.detections
        assert report.detections[0].compartment_keys is None


class TestReportShape:
    def test_serializes_to_json_dict(self, lab_index):
        report = detect(bundle_of(V1), lab_index, CFG, bundle_id="b1")
        doc = report_to_dict(report)
        assert doc["bundle_id"] == "b1"
        assert isinstance(doc["detections"], list)
        assert doc["detections"][0]["versions"]
        assert doc["config_digest"] and doc["index_digest"]

    def test_one_detection_per_package(self, lab_index):
        report = detect(bundle_of(V3), lab_index,
                        CFG)
        names = [d.package for d in report.detections]
        assert len(names) == len(set(names))
