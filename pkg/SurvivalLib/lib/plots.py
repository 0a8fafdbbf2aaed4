##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
"""Minimal SVG step plots of survival curves."""
from xml.sax.saxutils import escape

import numpy as np

from .resources.templates import (PALETTE, SVG_AXES, SVG_BAND, SVG_DOCUMENT,
                                  SVG_LEGEND, SVG_STEP, SVG_TICK)

MARGIN_LEFT = 50
MARGIN_RIGHT = 130
MARGIN_TOP = 35
MARGIN_BOTTOM = 45


def _step_points(times, values, start_value, x_max):
    """Return the vertices of a right-continuous step function from t=0 to x_max."""
    points = [(0.0, start_value)]
    current = start_value
    for t, v in zip(times, values):
        points.append((t, current))
        points.append((t, v))
        current = v
    points.append((x_max, current))
    return points


def render_step_svg(curves, title='Survival', x_label='Time (days)', y_label='Survival probability',
                    width=640, height=400, bands=True):
    """Return an SVG document plotting every labelled curve with its CI band."""
    if not curves:
        raise ValueError('nothing to plot')
    x_max = max([float(c.times[-1]) for c in curves.values() if len(c.times)] or [1.0])
    x0, x1 = MARGIN_LEFT, width - MARGIN_RIGHT
    y0, y1 = height - MARGIN_BOTTOM, MARGIN_TOP

    def sx(t):
        return x0 + (x1 - x0) * t / x_max

    def sy(s):
        return y0 - (y0 - y1) * s

    def fmt(points):
        return ' '.join('{:.2f},{:.2f}'.format(sx(t), sy(s)) for t, s in points)

    body = [SVG_AXES.format(x0=x0, y0=y0, x1=x1, y1=y1, x_label=escape(x_label),
                            x_label_x=(x0 + x1) / 2.0, x_label_y=height - 10,
                            y_label=escape(y_label), y_label_y=(y0 + y1) / 2.0)]
    for fraction in np.linspace(0, 1, 6):
        body.append(SVG_TICK.format(x='{:.2f}'.format(sx(fraction * x_max)), y=y0 + 15,
                                    anchor='middle', label='{:g}'.format(round(fraction * x_max))))
        body.append(SVG_TICK.format(x=x0 - 5, y='{:.2f}'.format(sy(fraction) + 3),
                                    anchor='end', label='{:.1f}'.format(fraction)))

    for k, (label, curve) in enumerate(curves.items()):
        color = PALETTE[k % len(PALETTE)]
        if bands and curve.has_ci and len(curve.times):
            upper = _step_points(curve.times, curve.ci_upper, 1.0, x_max)
            lower = _step_points(curve.times, curve.ci_lower, 1.0, x_max)
            body.append(SVG_BAND.format(points=fmt(upper + lower[::-1]), color=color))
        body.append(SVG_STEP.format(points=fmt(_step_points(curve.times, curve.survival, 1.0, x_max)),
                                    color=color))
        body.append(SVG_LEGEND.format(x=x1 + 10, y=MARGIN_TOP + 18 * k, color=color,
                                      text_x=x1 + 28, text_y=MARGIN_TOP + 18 * k + 5,
                                      label=escape(str(label))))
    return SVG_DOCUMENT.format(width=width, height=height, title=escape(title),
                               title_x=width / 2.0, body='\n'.join(body))
