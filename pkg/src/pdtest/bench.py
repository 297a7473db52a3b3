"""Benchmark harness: runs test configurations over matrices, emits CSV and JSON."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
import statistics
from dataclasses import asdict, dataclass, fields

from .bigraph import InputMatrix
from .generators import gen_nakayama
from .inflation import Strategy
from .positivity import igfpos, run_test
from .textio import read_matrix

log = logging.getLogger(__name__)

CSV_COLUMNS = ["n", "matrix_id", "algo", "strategy", "seed", "rep", "positive", "dynkin",
               "pair_inflations", "vertex_inflations", "elapsed_ms"]

# reference pair-inflation counts for Nak(400) with the plain inflation test
REFERENCE_COUNTS = {("nak400", "inflations", 0): 39800, ("nak400", "inflations", 1): 398}


@dataclass(frozen=True)
class BenchRow:
    n: int
    matrix_id: str
    algo: str
    strategy: int | None
    seed: int | None
    rep: int
    positive: bool
    dynkin: str | None
    pair_inflations: int
    vertex_inflations: int
    elapsed_ms: float

    @property
    def config(self):
        return (self.matrix_id, self.algo, self.strategy, self.seed)


def _opt_int(s):
    return None if s == "" else int(s)


def _row_from_csv(rec: dict) -> BenchRow:
    return BenchRow(
        n=int(rec["n"]),
        matrix_id=rec["matrix_id"],
        algo=rec["algo"],
        strategy=_opt_int(rec["strategy"]),
        seed=_opt_int(rec["seed"]),
        rep=int(rec["rep"]),
        positive=rec["positive"] == "true",
        dynkin=rec["dynkin"] or None,
        pair_inflations=int(rec["pair_inflations"]),
        vertex_inflations=int(rec["vertex_inflations"]),
        elapsed_ms=float(rec["elapsed_ms"]),
    )


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


@dataclass
class BenchReport:
    rows: list[BenchRow]

    def summary(self) -> list[dict]:
        """One entry per configuration with the median time over repetitions."""
        groups: dict = {}
        for r in self.rows:
            groups.setdefault(r.config, []).append(r)
        out = []
        def order(key):
            r = groups[key][0]
            return (r.n, r.matrix_id, r.algo, -1 if r.strategy is None else r.strategy,
                    -1 if r.seed is None else r.seed)

        for key in sorted(groups, key=order):
            rs = groups[key]
            first = rs[0]
            out.append({
                "n": first.n,
                "matrix_id": first.matrix_id,
                "algo": first.algo,
                "strategy": first.strategy,
                "seed": first.seed,
                "reps": len(rs),
                "positive": first.positive,
                "dynkin": first.dynkin,
                "pair_inflations": first.pair_inflations,
                "vertex_inflations": first.vertex_inflations,
                "median_ms": statistics.median(r.elapsed_ms for r in rs),
            })
        return out

    def scaling(self) -> dict:
        """Median time against ``n`` for every (algo, strategy, seed) over Nakayama inputs."""
        series: dict = {}
        for s in self.summary():
            if not s["matrix_id"].startswith("nak"):
                continue
            key = f"{s['algo']}/{s['strategy']}/{s['seed']}"
            series.setdefault(key, []).append([s["n"], s["median_ms"]])
        out = {}
        for key, pts in sorted(series.items()):
            pts.sort()
            ratios = [b[1] / a[1] if a[1] > 0 else None for a, b in zip(pts, pts[1:])]
            slopes = [
                math.log(b[1] / a[1]) / math.log(b[0] / a[0]) if a[1] > 0 and b[1] > 0 else None
                for a, b in zip(pts, pts[1:])
            ]
            out[key] = {"points": pts, "ratios": ratios, "loglog_slopes": slopes}
        return out

    def diagnostics(self) -> list[dict]:
        """Compare counts against the reference Nak(400) numbers."""
        out = []
        for s in self.summary():
            key = (s["matrix_id"], s["algo"], s["strategy"])
            if key not in REFERENCE_COUNTS:
                continue
            want = REFERENCE_COUNTS[key]
            got = s["pair_inflations"]
            ok_fallback = got <= igfpos(s["n"]) and s["positive"] and s["dynkin"] == f"A{s['n']}"
            status = "match" if got == want else ("warn" if ok_fallback else "fail")
            if status != "match":
                log.warning("%s %s strategy %s: %d pair inflations, reference %d (%s)",
                            *key, got, want, status)
            out.append({"matrix_id": key[0], "algo": key[1], "strategy": key[2],
                        "reference": want, "observed": got, "status": status})
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([_csv_cell(getattr(r, c)) for c in CSV_COLUMNS])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "BenchReport":
        return cls([_row_from_csv(rec) for rec in csv.DictReader(io.StringIO(text))])

    def to_json(self) -> dict:
        return {
            "columns": CSV_COLUMNS,
            "rows": [asdict(r) for r in self.rows],
            "summary": self.summary(),
            "scaling": self.scaling(),
            "diagnostics": self.diagnostics(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BenchReport":
        names = [f.name for f in fields(BenchRow)]
        return cls([BenchRow(**{k: rec[k] for k in names}) for rec in data["rows"]])

    def write(self, out_dir) -> tuple[str, str]:
        os.makedirs(out_dir, exist_ok=True)
        csv_path = os.path.join(out_dir, "bench.csv")
        json_path = os.path.join(out_dir, "bench.json")
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2, sort_keys=True)
        return csv_path, json_path


def configs(algos, strategies, seeds):
    """Expand algorithm/strategy/seed lists; seeds only multiply randomized strategies."""
    out = []
    for algo in algos:
        if algo == "gauss":
            out.append((algo, None, None))
            continue
        for s in strategies:
            if Strategy(s).randomized:
                out.extend((algo, int(s), int(seed)) for seed in seeds)
            else:
                out.append((algo, int(s), None))
    return out


def run_bench(sizes=(), algos=("root-inflations",), strategies=(0,), seeds=(0,), reps=3,
              files=(), precheck=True, early_exit=True, progress=None) -> BenchReport:
    """Run every configuration ``reps`` times on Nak(n) for ``n`` in ``sizes`` and on ``files``."""
    if reps < 1:
        raise ValueError("reps must be positive")
    matrices: list[tuple[str, InputMatrix]] = [(f"nak{n}", gen_nakayama(n)) for n in sizes]
    for path in files:
        matrices.append((os.path.splitext(os.path.basename(path))[0], read_matrix(path)))
    rows = []
    for mid, A in matrices:
        for algo, strategy, seed in configs(algos, strategies, seeds):
            for rep in range(reps):
                o = run_test(A, algo, 0 if strategy is None else strategy, seed, precheck, early_exit)
                rows.append(BenchRow(
                    n=A.n, matrix_id=mid, algo=algo, strategy=strategy, seed=seed, rep=rep,
                    positive=o.positive, dynkin=None if o.dynkin is None else str(o.dynkin),
                    pair_inflations=o.pair_inflations, vertex_inflations=o.vertex_inflations,
                    elapsed_ms=o.elapsed_ms,
                ))
                if progress:
                    progress(rows[-1])
    return BenchReport(rows)
