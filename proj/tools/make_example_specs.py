#!/usr/bin/env python3
# Copyright 2026 The povmsim Authors
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
"""Regenerates data/examples/*.json from closed-form operator definitions."""

import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "examples"


def entry(z):
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def matrix(m):
    return [[entry(z) for z in row] for row in np.asarray(m)]


def proj(v):
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def bloch(theta, phi=0.0):
    return np.array([np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * phi)])


def dump(value, indent=0):
    pad = " " * indent
    if isinstance(value, dict):
        items = [f'{pad}  {json.dumps(k)}: {dump(v, indent + 2).lstrip()}' for k, v in value.items()]
        return pad + "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and value and isinstance(value[0], list) and isinstance(value[0][0], list):
        # list of rows / matrices: one row per line
        items = [dump(v, indent + 2) for v in value]
        return pad + "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return pad + json.dumps(value)


def write(name, doc):
    doc = {"name": name, **doc}
    (OUT / f"{name}.json").write_text(dump(doc) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    k0, k1 = np.eye(2)
    s3 = np.sqrt(3)

    c = 1 / (2 * np.sqrt(2))
    write("ex1", {
        "description": "one-qubit two-element POVM on |0>",
        "kind": "povm", "dim": 2,
        "operators": [matrix(c * (proj(k0) + s3 * np.outer(k1, k0) + 2 * proj(k1))),
                      matrix(c * (proj(k0) - s3 * np.outer(k1, k0) + 2 * proj(k1)))],
        "labels": ["M1", "M2"],
        "state": {"preset": "zero"},
        "noise": "../calibration/ibmq_belem_table1.json",
    })

    w = np.sqrt(2 / 3)
    write("ex2", {
        "description": "one-qubit trine POVM in the xz plane on |0>",
        "kind": "povm", "dim": 2,
        "operators": [matrix(w * proj(bloch(t))) for t in (0, 2 * np.pi / 3, 4 * np.pi / 3)],
        "labels": ["M1", "M2", "M3"],
        "state": {"preset": "zero"},
        "noise": "../calibration/ibmq_belem_table1.json",
    })

    e = np.eye(3)
    omega = np.exp(2j * np.pi / 3)
    write("ex3", {
        "description": "one-qutrit three-element POVM",
        "kind": "povm", "dim": 3,
        "operators": [matrix(0.5 * proj(e[0] + e[2])), matrix(0.5 * proj(e[0] - e[2])), matrix(proj(e[1]))],
        "labels": ["M1", "M2", "M3"],
        "state": {"amplitudes": [entry(z) for z in np.array([1, omega, omega ** 2]) / s3]},
        "noise": "../calibration/ibmq_belem_table1.json",
    })

    f = np.eye(4)
    phi_p, phi_m = (f[0] + f[3]) / np.sqrt(2), (f[0] - f[3]) / np.sqrt(2)
    psi_p, psi_m = (f[1] + f[2]) / np.sqrt(2), (f[1] - f[2]) / np.sqrt(2)
    tilt = lambda t: np.cos(t / 2) * phi_p + np.sin(t / 2) * psi_p
    write("ex4", {
        "description": "two-qubit four-element POVM on |00> (standard Bell basis)",
        "kind": "povm", "dim": 4,
        "operators": [matrix(w * proj(phi_p)), matrix(w * proj(tilt(2 * np.pi / 3))),
                      matrix(w * proj(tilt(4 * np.pi / 3))), matrix(proj(phi_m) + proj(psi_m))],
        "labels": ["M1", "M2", "M3", "M4"],
        "state": {"preset": "zero"},
        "noise": "../calibration/ibmq_belem_table1.json",
    })

    plus, minus = (k0 + k1) / np.sqrt(2), (k0 - k1) / np.sqrt(2)
    r = 1 / np.sqrt(2)
    write("qi", {
        "description": "one-qubit two-branch quantum instrument on |0>",
        "kind": "instrument", "dim": 2,
        "branches": [[matrix(r * proj(k0)), matrix(r * proj(plus))],
                     [matrix(r * proj(k1)), matrix(r * proj(minus))]],
        "state": {"preset": "zero"},
        "noise": "../calibration/ibmq_belem_table2.json",
    })


if __name__ == "__main__":
    main()
