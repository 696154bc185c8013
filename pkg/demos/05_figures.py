"""
Drawing node sets and curves
============================

render_svg draws nodes as numbered circles and curves as traced polylines.
The tracing samples a float grid -- strictly a display device; every
decision in the library stays rational.  Identical inputs give identical
bytes, so figures are safe to diff.
"""

import pathlib

from nodecurves import characterize_defect, defect_config
from nodecurves.svg import render_svg

n, k, seed = 3, 2, 4
cfg = defect_config(n, k, seed)
report = characterize_defect(cfg.nodes, n, k)

# Draw the configuration with the recovered curve, outlier highlighted.
text = render_svg(cfg.nodes, [report.mu.poly], highlight=report.outlier_index)

out = pathlib.Path(__file__).with_name("defect.svg")
out.write_text(text)
print("wrote", out)
print("nodes drawn:", text.count("<circle"))
print("outlier index:", report.outlier_index)
