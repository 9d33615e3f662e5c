import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wearlca.core import (
    MACHINING_TOOL_CLASSES,
    ROTATING_ANODE_CLASSES,
    SegmentationMask,
)

FIXTURES = Path(__file__).parent / "fixtures"


def mask(rows, class_map=MACHINING_TOOL_CLASSES):
    return SegmentationMask(labels=np.array(rows, dtype=np.uint8), class_map=class_map)


@pytest.fixture
def machining_map():
    return MACHINING_TOOL_CLASSES


@pytest.fixture
def anode_map():
    return ROTATING_ANODE_CLASSES


@pytest.fixture
def machining_fixture_manifest():
    return FIXTURES / "metrics" / "machining" / "manifest.json"


@pytest.fixture
def anode_fixture_manifest():
    return FIXTURES / "metrics" / "anode" / "manifest.json"


def write_tiny_manifest(tmp_path, class_map, roles, with_pred=True):
    """Write a manifest of 1x1 masks with the given list of roles."""
    records = []
    for i, role in enumerate(roles):
        gt = f"gt_{i}.txt"
        (tmp_path / gt).write_text("0\n")
        rec = {"image_id": f"img_{i}", "role": role, "gt": gt}
        if with_pred:
            pred = f"pred_{i}.txt"
            (tmp_path / pred).write_text("0\n")
            rec["pred"] = pred
        records.append(rec)
    doc = {"class_map": class_map.family.value, "records": records}
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(doc))
    return path
