#!/usr/bin/env python3
# Copyright 2026 The biclose Authors
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
"""Builds data/uci/*.csv and *.schema.json for the benchmark datasets.

Car, Voting and Zoo are taken from the copies bundled with the Orange3 3.3.12
source distribution; Heart comes from the KEEL copy bundled with keel_ds.
Both archives are fetched from PyPI unless local paths are given.
"""

import argparse
import csv
import io
import json
import pathlib
import subprocess
import sys
import tarfile
import tempfile
import urllib.request
import zipfile

ORANGE_SDIST = (
    "https://pypi.org/packages/8b/6f/4bb30b6b9f06654401b071cdbfc8b56444cc68739eaee8d5260cacceb213/"
    "Orange3-3.3.12.tar.gz"
)
KEEL_WHEEL = "keel_ds==0.2.5"

YES_NO = ["yes", "no"]


def read_orange_tab(text):
    """Orange .tab: names, types and flags on the first three lines."""
    lines = text.splitlines()
    header = lines[0].split("\t")
    rows = [line.split("\t") for line in lines[3:] if line.strip()]
    return header, [[c.strip() for c in r] for r in rows]


def write_dataset(out_dir, name, header, rows, schema):
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / f"{name}.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    with open(out_dir / f"{name}.schema.json", "w") as f:
        json.dump(schema, f, indent=2)
        f.write("\n")
    print(f"wrote {name}: {len(rows)} rows")


def convert_car(text, out_dir):
    header, rows = read_orange_tab(text)
    names = ["buying", "maint", "doors", "persons", "lugBoot", "safety", "class"]
    assert len(header) == len(names)
    price = ["low", "med", "high", "v-high"]
    classes = {"unacc": "1", "acc": "2", "good": "3", "v-good": "4"}
    out = [r[:6] + [classes[r[6]]] for r in rows]
    schema = {
        "label": "class",
        "columns": [
            {"name": "buying", "kind": "ordinal", "categories": price, "epsilon": 0},
            {"name": "maint", "kind": "ordinal", "categories": price, "epsilon": 1},
            {"name": "doors", "kind": "ordinal", "categories": ["2", "3", "4", "5-more"], "epsilon": 1},
            {"name": "persons", "kind": "ordinal", "categories": ["2", "4", "more"], "epsilon": 0},
            {"name": "lugBoot", "kind": "ordinal", "categories": ["small", "med", "big"], "epsilon": 0},
            {"name": "safety", "kind": "ordinal", "categories": ["low", "med", "high"], "epsilon": 0},
        ],
    }
    write_dataset(out_dir, "car", names, out, schema)


def convert_voting(text, out_dir):
    header, rows = read_orange_tab(text)
    names = ["class", "hInfants", "wProject", "budgetRes", "physicianFF", "ES-aid", "rgSchools",
             "antiSatelliteTT", "aidNicaraguaC", "mxMissile", "immigration", "sfCorpCut", "eduSpending",
             "superfundRS", "crime", "dutyFree", "admSA"]
    assert len(header) == len(names)
    classes = {"republican": "0", "democrat": "1"}
    vote = {"y": "yes", "n": "no", "": ""}
    out = [[classes[r[0]]] + [vote[c] for c in r[1:]] for r in rows]
    schema = {
        "label": "class",
        "missing": "",
        "columns": [{"name": n, "kind": "nominal", "categories": YES_NO, "epsilon": 0} for n in names[1:]],
    }
    write_dataset(out_dir, "voting", names, out, schema)


def convert_zoo(text, out_dir):
    header, rows = read_orange_tab(text)
    assert header[0] == "name" and header[-1] == "type"
    classes = {"mammal": "1", "bird": "2", "reptile": "3", "fish": "4", "amphibian": "5", "insect": "6",
               "invertebrate": "7"}
    flags = {"0": "no", "1": "yes"}
    names = header[:-1] + ["class"]
    out = []
    for r in rows:
        cells = [r[0]]
        for h, c in zip(header[1:-1], r[1:-1]):
            cells.append(c if h == "legs" else flags[c])
        out.append(cells + [classes[r[-1]]])
    columns = []
    for h in header[1:-1]:
        if h == "legs":
            columns.append({"name": h, "kind": "integer", "epsilon": 0})
        else:
            columns.append({"name": h, "kind": "nominal", "categories": YES_NO, "epsilon": 0})
    schema = {"label": "class", "id": "name", "columns": columns}
    write_dataset(out_dir, "zoo", names, out, schema)


def convert_heart(text, out_dir):
    names = ["age", "sex", "chestPain", "bloodPres", "chol", "fastBSugar", "electro", "heartRate",
             "exercIAngina", "oldpeak", "slope", "vesselsColor", "thal", "class"]
    chest = {"1": "typical Angina", "2": "atypical Angina", "3": "non-anginal Pain", "4": "asymptomatic"}
    electro = {"0": "normal", "1": "ST-T", "2": "LVH"}
    slope = {"1": "upsloping", "2": "flat", "3": "downsloping"}
    thal = {"3": "normal", "6": "fixed Defect", "7": "reversable Defect"}
    yes_no = {"0": "no", "1": "yes"}
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("@"):
            continue
        c = [x.strip() for x in line.split(",")]
        num = lambda s: format(float(s), "g")
        out.append([
            num(c[0]), {"0": "F", "1": "M"}[c[1]], chest[num(c[2])], num(c[3]), num(c[4]), yes_no[num(c[5])],
            electro[num(c[6])], num(c[7]), yes_no[num(c[8])], format(float(c[9]) / 10.0, "g"), slope[num(c[10])],
            num(c[11]), thal[num(c[12])], {"1": "0", "2": "1"}[num(c[13])],
        ])
    schema = {
        "label": "class",
        "columns": [
            {"name": "age", "kind": "integer", "epsilon": 4},
            {"name": "sex", "kind": "nominal", "categories": ["F", "M"], "epsilon": 0},
            {"name": "chestPain", "kind": "nominal", "categories": list(chest.values()), "epsilon": 0},
            {"name": "bloodPres", "kind": "real", "epsilon": 10},
            {"name": "chol", "kind": "real", "epsilon": 30},
            {"name": "fastBSugar", "kind": "nominal", "categories": YES_NO, "epsilon": 0},
            {"name": "electro", "kind": "nominal", "categories": list(electro.values()), "epsilon": 0},
            {"name": "heartRate", "kind": "real", "epsilon": 10},
            {"name": "exercIAngina", "kind": "nominal", "categories": YES_NO, "epsilon": 0},
            {"name": "oldpeak", "kind": "real", "epsilon": 0.5},
            {"name": "slope", "kind": "ordinal", "categories": list(slope.values()), "epsilon": 0},
            {"name": "vesselsColor", "kind": "integer", "epsilon": 0},
            {"name": "thal", "kind": "nominal", "categories": list(thal.values()), "epsilon": 0},
        ],
    }
    write_dataset(out_dir, "heart", names, out, schema)


def write_worked_example(out_dir):
    rows = [
        [0.278, 0.422, 0.743], [0.547, 0.916, 0.392], [0.958, 0.792, 0.655], [0.965, 0.959, 0.171],
        [0.158, 0.656, 0.706], [0.971, 0.036, 0.032], [0.957, 0.849, 0.277], [0.485, 0.934, 0.046],
        [0.800, 0.679, 0.097], [0.142, 0.758, 0.823],
    ]
    schema = {"columns": [{"name": n, "kind": "real", "epsilon": 0.2} for n in ("a1", "a2", "a3")]}
    write_dataset(out_dir, "uniform10x3", ["a1", "a2", "a3"], rows, schema)


def orange_files(sdist):
    wanted = {"car.tab", "voting.tab", "zoo.tab"}
    found = {}
    with tarfile.open(sdist) as tar:
        for m in tar.getmembers():
            base = m.name.rsplit("/", 1)[-1]
            if "/datasets/" in m.name and base in wanted:
                found[base] = tar.extractfile(m).read().decode()
    return found


def keel_heart(wheel):
    with zipfile.ZipFile(wheel) as z:
        return z.read("keel_ds/data/balanced/raw/heart.dat").decode()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[1] / "data"))
    ap.add_argument("--orange-sdist", help="local Orange3-3.3.12.tar.gz")
    ap.add_argument("--keel-wheel", help="local keel_ds-0.2.5 wheel")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    tmp = pathlib.Path(tempfile.mkdtemp())

    sdist = args.orange_sdist
    if not sdist:
        sdist = tmp / "orange.tar.gz"
        urllib.request.urlretrieve(ORANGE_SDIST, sdist)
    wheel = args.keel_wheel
    if not wheel:
        subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps", "-d", str(tmp), KEEL_WHEEL],
                       check=True)
        wheel = next(tmp.glob("keel_ds-*.whl"))

    tabs = orange_files(sdist)
    convert_car(tabs["car.tab"], out / "uci")
    convert_voting(tabs["voting.tab"], out / "uci")
    convert_zoo(tabs["zoo.tab"], out / "uci")
    convert_heart(keel_heart(wheel), out / "uci")
    write_worked_example(out)


if __name__ == "__main__":
    main()
