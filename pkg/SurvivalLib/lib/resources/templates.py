##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
DEFAULT_CONFIG = """
inputs:
  survival: null
  survival_format: tsv
  survival_key: sample
  clinical: null
  clinical_format: json
  clinical_key: sampleID

preprocess:
  time_column: OS.time
  event_column: OS
  numeric_features: [PFI.time, days_to_new_tumor_event, age_at_diagnosis]
  label_encode:
    gender: {FEMALE: 0, MALE: 1}
  one_hot:
    residual_tumor:
      reference: R0
      categories: [R0, R1, R2, RX]
  rename:
    age_at_initial_pathologic_diagnosis: age_at_diagnosis
  outlier_column: OS.time
  iqr_multiplier: 1.5
  split_ratio: 0.8

features:
  - PFI.time
  - days_to_new_tumor_event
  - age_at_diagnosis
  - gender_encoded
  - residual_tumor_R1
  - residual_tumor_R2
  - residual_tumor_RX
exclude: []

km:
  confidence_level: 0.95
  ci_method: log-log

cox:
  tie_method: efron
  max_iterations: 100
  confidence_level: 0.95

rsf:
  n_trees: 500
  min_samples_split: 10
  min_samples_leaf: 5

horizon: 1000
output: out
seed: 42
"""

SVG_DOCUMENT = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">
<title>{title}</title>
<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>
<text x="{title_x}" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">{title}</text>
{body}
</svg>
"""

SVG_AXES = """<g stroke="black" stroke-width="1">
<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>
<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>
</g>
<text x="{x_label_x}" y="{x_label_y}" font-family="sans-serif" font-size="12" text-anchor="middle">{x_label}</text>
<text x="14" y="{y_label_y}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 14 {y_label_y})">{y_label}</text>"""

SVG_TICK = """<text x="{x}" y="{y}" font-family="sans-serif" font-size="10" text-anchor="{anchor}">{label}</text>"""

SVG_BAND = """<polygon points="{points}" fill="{color}" fill-opacity="0.15" stroke="none"/>"""

SVG_STEP = """<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>"""

SVG_LEGEND = """<rect x="{x}" y="{y}" width="12" height="3" fill="{color}"/>
<text x="{text_x}" y="{text_y}" font-family="sans-serif" font-size="11">{label}</text>"""

PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b', '#e377c2', '#7f7f7f']
