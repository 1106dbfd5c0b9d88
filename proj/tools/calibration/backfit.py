#!/usr/bin/env python3
# Copyright 2026 The impactscreen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Back-solves the fitted values shipped in data/catalog.

Every fitted number in the bundle comes out of this script by closed-form
inversion of the power laws, so the bundle can be regenerated and audited
without running the C++ engine. Prints YAML fragments to stdout.
"""

import yaml
from pathlib import Path

BUNDLE = Path(__file__).resolve().parents[2] / "data" / "catalog"

anchors = yaml.safe_load((BUNDLE / "anchors.yaml").read_text())
factors = yaml.safe_load((BUNDLE / "factors.yaml").read_text())["factors"]
models = yaml.safe_load((BUNDLE / "models.yaml").read_text())["models"]
countries = {c["code"]: c["carbon_intensity_g_per_kwh"]
             for c in yaml.safe_load((BUNDLE / "countries.yaml").read_text())["countries"]}

inf = anchors["inference"]
E_A = inf["anchor_energy_wh"]
P_A = inf["anchor_active_params_b"]
ALPHA_C = inf["alpha"][1]
BETA_C = inf["beta"][1]
V_REF = inf["ref_input_tokens"] + inf["output_token_weight"] * inf["ref_output_tokens"]

tr = anchors["training"]
TR_E, TR_P, TR_TOK = tr["anchor_energy_gwh"], tr["anchor_params_b"], tr["anchor_tokens_b"]
TR_ALPHA_C = tr.get("alpha", inf["alpha"])[1]
TR_BETA_C = tr.get("beta", inf["beta"])[1]

# Published per-request (Wh, g) and training GWh, at display precision.
INFERENCE_TARGETS = {
    "claude-opus-4-1": (2.9922, 1.1520),
    "gpt-5-2": (2.7897, 1.0740),
    "gemini-2-5-pro": (0.3601, 0.1387),
    "gpt-5-mini": (0.1706, 0.0657),
    "llama-3-1-70b": (0.1043, 0.0402),
    "gpt-4o-mini": (0.0155, 0.0060),
    "ministral-3b": (0.0056, 0.0002),
}
TRAINING_TARGETS = {
    "claude-opus-4-1": 125.63,
    "gpt-5-2": 101.76,
    "gemini-2-5-pro": 1.26,
    "gpt-5-mini": 0.28,
    "llama-3-1-70b": 0.16,
    "gpt-4o-mini": 0.0027,
    "ministral-3b": 0.0004,
}
# Annual figures: kWh/yr at the stated monthly volume.
MINISTRAL_8B_ANNUAL_KWH, MINISTRAL_8B_MONTHLY = 2.38, 20_000
RETRIEVAL_ANNUAL_KWH, RETRIEVAL_MONTHLY = 12.31, 4_000

HALF = 0.5e-4


def table_triple(kinds_and_categories):
    out = [1.0, 1.0, 1.0]
    for kind, cat in kinds_and_categories:
        trip = factors[kind][cat]
        out = [o * t for o, t in zip(out, trip)]
    return out


def feasible_energy(energy, carbon, ci):
    # Intersection of the rounding windows of energy and energy*ci/1000.
    lo = max(energy - HALF, (carbon - HALF) / ci * 1000.0)
    hi = min(energy + HALF, (carbon + HALF) / ci * 1000.0)
    assert lo < hi, "no energy value reproduces both published figures"
    return 0.5 * (lo + hi)


def invert_inference(energy_wh):
    return P_A * (energy_wh / E_A) ** (1.0 / ALPHA_C)


def fitted_triple(central, table):
    return [central * table[0] / table[1], central, central * table[2] / table[1]]


by_id = {m["id"]: m for m in models}
print("# inference overrides")
for mid, (e, c) in INFERENCE_TARGETS.items():
    m = by_id[mid]
    ci = countries[m["provider_country"]]
    target = feasible_energy(e, c, ci)
    peff = invert_inference(target)
    table = table_triple([("ctx", m["context_class"]), ("srv", m["serving_mode"]),
                          ("mod", m["modality"]), ("arch", m["arch_note"])])
    trip = fitted_triple(peff / m["raw_active_params_b"], table)
    print(f"{mid}: inference: [{trip[0]:.10g}, {trip[1]:.10g}, {trip[2]:.10g}]  # P_eff central {peff:.6g} B")

m8 = by_id["ministral-8b"]
e8 = MINISTRAL_8B_ANNUAL_KWH * 1000.0 / (12 * MINISTRAL_8B_MONTHLY)
peff8 = invert_inference(e8)
table8 = table_triple([("ctx", m8["context_class"]), ("srv", m8["serving_mode"]),
                       ("mod", m8["modality"]), ("arch", m8["arch_note"])])
trip8 = fitted_triple(peff8 / m8["raw_active_params_b"], table8)
print(f"ministral-8b: inference: [{trip8[0]:.10g}, {trip8[1]:.10g}, {trip8[2]:.10g}]  # {e8:.6g} Wh/request")

print("# training overrides")
for mid, gwh in TRAINING_TARGETS.items():
    m = by_id[mid]
    tok = m.get("training_tokens_b") or 20.0 * m["raw_active_params_b"]
    base = TR_E * (m["raw_active_params_b"] / TR_P) ** TR_ALPHA_C * (tok / TR_TOK) ** TR_BETA_C
    arch_tr = table_triple([("arch_tr", m["arch_note"]), ("arch_tr", m["modality"])])
    table = table_triple([("reg", m.get("training_regime", "foundation_pretraining")),
                          ("hw", m["hardware_class"])])
    table = [a * b for a, b in zip(table, arch_tr)]
    trip = fitted_triple(gwh / base, table)
    print(f"{mid}: training: [{trip[0]:.10g}, {trip[1]:.10g}, {trip[2]:.10g}]")

print("# retrieval weighted volume")
gpt5 = INFERENCE_TARGETS["gpt-5-mini"][0]
per_request = RETRIEVAL_ANNUAL_KWH * 1000.0 / (12 * RETRIEVAL_MONTHLY)
volume = V_REF * (per_request / gpt5) ** (1.0 / BETA_C)
print(f"retrieval: {per_request:.6g} Wh/request -> weighted volume {volume:.2f}")
