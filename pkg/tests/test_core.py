import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from wearlca import errors
from wearlca.core import (
    MACHINING_TOOL_CLASSES,
    ROTATING_ANODE_CLASSES,
    ProbabilityMap,
    SegmentationMask,
    argmax_decode,
    class_map_for,
    load_manifest,
    load_mask,
    validate_manifest,
    write_mask,
)

from conftest import mask, write_tiny_manifest


class TestClassMap:
    def test_machining_taxonomy(self):
        assert MACHINING_TOOL_CLASSES.names == (
            "background",
            "flank_wear",
            "chipping",
            "built_up_edge",
        )

    def test_anode_taxonomy(self):
        assert ROTATING_ANODE_CLASSES.names == ("normal_surface", "cracks", "molten_area")

    def test_unknown_name_rejected(self):
        with pytest.raises(errors.ClassMapMismatch):
            class_map_for("gearbox")


class TestLoadMask:
    def test_text_grid_decode(self, tmp_path):
        p = tmp_path / "m.txt"
        p.write_text("0 0\n1 1\n")
        m = load_mask(p, MACHINING_TOOL_CLASSES)
        assert m.n_pixels == 4
        assert set(np.unique(m.labels)) == {0, 1}

    def test_png_decode(self, tmp_path):
        src = mask([[0, 1], [2, 3]])
        path = tmp_path / "m.png"
        write_mask(src, path)
        loaded = load_mask(path, MACHINING_TOOL_CLASSES)
        assert np.array_equal(loaded.labels, src.labels)

    def test_unknown_class_id(self, tmp_path):
        p = tmp_path / "m.txt"
        p.write_text("0 7\n")
        with pytest.raises(errors.UnknownClassId) as exc:
            load_mask(p, MACHINING_TOOL_CLASSES)
        assert exc.value.value == 7

    def test_missing_file(self, tmp_path):
        with pytest.raises(errors.UnreadableFile):
            load_mask(tmp_path / "nope.png", MACHINING_TOOL_CLASSES)

    def test_ragged_rows(self, tmp_path):
        p = tmp_path / "m.txt"
        p.write_text("0 0\n0\n")
        with pytest.raises(errors.DimensionMismatch):
            load_mask(p, MACHINING_TOOL_CLASSES)

    @pytest.mark.slow
    def test_full_size_anode_patch_grid(self, tmp_path):
        # a single microscope capture: 19,000 x 5,000 pixels
        labels = np.zeros((19000, 5000), dtype=np.uint8)
        labels[100:200, :] = 1
        path = tmp_path / "track.png"
        write_mask(SegmentationMask(labels, ROTATING_ANODE_CLASSES), path)
        m = load_mask(path, ROTATING_ANODE_CLASSES)
        assert m.n_pixels == 95_000_000

    @given(
        labels=arrays(
            np.uint8,
            st.tuples(st.integers(1, 12), st.integers(1, 12)),
            elements=st.integers(0, 3),
        ),
        fmt=st.sampled_from(["txt", "png"]),
    )
    @settings(max_examples=40, deadline=None)
    def test_round_trip_identity(self, labels, fmt, tmp_path_factory):
        tmp = tmp_path_factory.mktemp("roundtrip")
        src = SegmentationMask(labels, MACHINING_TOOL_CLASSES)
        path = tmp / f"m.{fmt}"
        write_mask(src, path)
        assert np.array_equal(load_mask(path, MACHINING_TOOL_CLASSES).labels, src.labels)


class TestArgmaxDecode:
    def test_unique_max(self):
        probs = ProbabilityMap(np.array([[[0.1, 0.9, 0.0, 0.0]]]))
        assert argmax_decode(probs, MACHINING_TOOL_CLASSES).labels[0, 0] == 1

    def test_tie_breaks_to_lowest_id(self):
        probs = ProbabilityMap(np.array([[[0.5, 0.5, 0.0, 0.0]]]))
        assert argmax_decode(probs, MACHINING_TOOL_CLASSES).labels[0, 0] == 0

    def test_per_pixel_independence(self):
        probs = ProbabilityMap(
            np.array([[[0, 0, 1, 0], [0, 0, 0, 1]]], dtype=float).reshape(2, 1, 4)
        )
        decoded = argmax_decode(probs, MACHINING_TOOL_CLASSES)
        assert decoded.labels.ravel().tolist() == [2, 3]

    def test_length_mismatch(self):
        probs = ProbabilityMap(np.zeros((1, 1, 3)))
        with pytest.raises(errors.LengthMismatch):
            argmax_decode(probs, MACHINING_TOOL_CLASSES)

    @given(
        arrays(
            np.float64,
            st.tuples(st.integers(1, 6), st.integers(1, 6), st.just(4)),
            # integer-valued scores keep the shifted sums exactly
            # representable, so ties stay ties and strict orderings survive
            elements=st.integers(-5, 5).map(float),
        ),
        st.integers(-10, 10).map(float),
    )
    @settings(max_examples=50, deadline=None)
    def test_shift_invariance(self, scores, shift):
        a = argmax_decode(ProbabilityMap(scores), MACHINING_TOOL_CLASSES)
        b = argmax_decode(ProbabilityMap(scores + shift), MACHINING_TOOL_CLASSES)
        assert np.array_equal(a.labels, b.labels)


class TestManifest:
    def test_large_corpus_split_counts(self, tmp_path):
        roles = ["train"] * 152 + ["validation"] * 10 + ["test"] * 51
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, roles, with_pred=False)
        counts = validate_manifest(load_manifest(path))
        assert (counts.train, counts.validation, counts.test) == (152, 10, 51)
        assert counts.total == 213

    def test_empty_manifest(self, tmp_path):
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, [])
        counts = validate_manifest(load_manifest(path))
        assert (counts.train, counts.validation, counts.test) == (0, 0, 0)

    def test_duplicate_image_id(self, tmp_path):
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, ["test", "test"])
        doc = json.loads(path.read_text())
        doc["records"][1]["image_id"] = doc["records"][0]["image_id"]
        path.write_text(json.dumps(doc))
        with pytest.raises(errors.DuplicateImageId):
            validate_manifest(load_manifest(path))

    def test_missing_file(self, tmp_path):
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, ["test"])
        (tmp_path / "gt_0.txt").unlink()
        with pytest.raises(errors.MissingFile):
            validate_manifest(load_manifest(path))

    def test_class_map_mismatch(self, tmp_path):
        # value 3 is valid for machining but not for the 3-class anode map
        path = write_tiny_manifest(tmp_path, ROTATING_ANODE_CLASSES, ["test"])
        (tmp_path / "gt_0.txt").write_text("3\n")
        with pytest.raises(errors.ClassMapMismatch):
            validate_manifest(load_manifest(path))

    def test_record_order_irrelevant(self, tmp_path):
        roles = ["train", "test", "validation", "test"]
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, roles)
        doc = json.loads(path.read_text())
        counts_fwd = validate_manifest(load_manifest(path))
        doc["records"].reverse()
        path.write_text(json.dumps(doc))
        assert validate_manifest(load_manifest(path)) == counts_fwd

    def test_idempotent(self, tmp_path):
        path = write_tiny_manifest(tmp_path, MACHINING_TOOL_CLASSES, ["train", "test"])
        manifest = load_manifest(path)
        assert validate_manifest(manifest) == validate_manifest(manifest)
