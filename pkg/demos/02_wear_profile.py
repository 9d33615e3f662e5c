"""Build a process wear profile from ground-truth masks.

Summarizes each mask (class fractions, connected wear regions, wear
extent), aggregates tool-level summaries into fleet statistics, and shows
the focal-track extrapolation step used when only a sliver of a large
surface was imaged.
"""

from pathlib import Path

from wearlca import analytics
from wearlca.core import load_manifest, load_mask

corpus = Path(__file__).parents[1] / "tests" / "fixtures" / "metrics" / "anode"

manifest = load_manifest(corpus / "manifest.json")
summaries = [
    analytics.summarize(load_mask(r.gt, manifest.class_map), r.image_id)
    for r in manifest.records
]

for s in summaries:
    regions = sum(s.region_count.values())
    largest = max(s.largest_region_area.values())
    print(f"{s.image_id}: wear regions={regions} largest region={largest}px")

profile = analytics.aggregate(summaries)
print(f"\naggregated over {profile.n_tools} captures")
for class_id, stats in sorted(profile.per_class.items()):
    name = manifest.class_map.name_of(class_id)
    print(
        f"  {name:<16} mean={stats.mean:.3f} median={stats.median:.3f} "
        f"incidence={stats.incidence:.2f}"
    )

# a 25x40 patch standing in for a tiny slice of a much larger focal track:
# scale sampled areas up by the inverse of the covered fraction.
estimate = analytics.extrapolate(
    summaries[0], coverage_fraction=0.004, pixel_pitch=5e-6
)
print(f"\nextrapolation assumption: {estimate.assumption}")
for class_id, area in sorted(estimate.estimated_class_area.items()):
    name = manifest.class_map.name_of(class_id)
    print(f"  {name:<16} estimated area {area * 1e6:.2f} mm^2")
