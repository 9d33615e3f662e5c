"""Walk through metric evaluation on the bundled demonstration corpus.

Loads the small machining-tool corpus shipped with the test fixtures,
computes pooled per-class Dice and pixel accuracy, and prints the report
the same way `wearlca evaluate` would serialize it.
"""

from pathlib import Path

from wearlca.core import load_manifest, load_mask, validate_manifest
from wearlca.metrics import dataset_metrics, report_to_dict

corpus = Path(__file__).parents[1] / "tests" / "fixtures" / "metrics" / "machining"

manifest = load_manifest(corpus / "manifest.json")
counts = validate_manifest(manifest)
print(f"splits: train={counts.train} validation={counts.validation} test={counts.test}")

pairs = [
    (load_mask(r.pred, manifest.class_map), load_mask(r.gt, manifest.class_map))
    for r in manifest.records
]
report = dataset_metrics(pairs, manifest.class_map)

for class_id, dice in sorted(report.per_class_dice.items()):
    name = manifest.class_map.name_of(class_id)
    print(f"  {name:<16} dice={dice:.3f}")
print(f"mean DSC       {report.mean_dsc:.4f}")
print(f"pixel accuracy {report.pixel_accuracy:.4f}")

# the same thing as a serializable document
doc = report_to_dict(report)
print(f"report keys: {sorted(doc)}")
