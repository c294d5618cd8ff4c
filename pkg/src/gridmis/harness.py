"""Cross-verification harness: every quantity two ways, compared exactly.

A verification case pins one instance (family, m, n) and one quantity, and
compares the outputs of two independent engines -- enumeration against the
slice DP, closed formulas against either, orbit counts against Burnside
averages, string fiberings against their characterised image sets.  Exact
quantities compare with zero tolerance; engine values are rendered to
strings before comparison so reports round-trip losslessly through CSV and
JSON.

Engine exceptions become failing cases rather than crashes, and a failing
case carries both values, which is enough to reproduce it in isolation.
Two runs with the same config produce byte-identical reports.
"""

import csv
import io
import json
import random
from collections import Counter
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from . import formulas, strings, symmetry
from .counting import (count_mis_dp, count_mis_for_parity, enumerate_mis,
                       size_polynomial_dp, verify_mis, VALID_MIS,
                       NOT_INDEPENDENT, NOT_MAXIMAL)
from .grids import GridFamily, build

CSV_HEADER = "family,m,n,quantity,engine_a,value_a,engine_b,value_b,outcome"


@dataclass(frozen=True)
class VerificationCase:
    family: str
    m: int
    n: int
    quantity: str
    engine_a: str
    value_a: str
    engine_b: str
    value_b: str
    outcome: str

    @property
    def passed(self):
        return self.outcome == "pass"


@dataclass
class RunConfig:
    """Budgets and sweep ranges for the verification suite.

    The defaults reproduce the full acceptance matrix in a few seconds.
    """
    enumeration_budget: int = 36
    dp_width_budget: int = 12
    seed: int = 0
    output_format: str = "human"

    oracle_m_max: int = 4
    oracle_n_max: int = 8
    twobyn_n_max: int = 20
    twobyn_oracle_n_max: int = 12
    grid_nimis_n_max: int = 14
    tube_nimis_n_max: int = 10
    band_nimis_n_max: int = 10
    parity_grid_max: int = 5
    parity_grid_2xn_max: int = 10
    parity_cyl_m_max: int = 4
    parity_cyl_n_max: int = 7
    totals_grid_n_max: int = 16
    totals_cyclic_n_max: int = 12
    distribution_n_max: int = 10
    strings_n_max: int = 12
    spot_checks: int = 20

    def validate(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, int) and f.name != "seed" and v <= 0:
                raise ValueError(f"config field {f.name} must be positive, got {v}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.output_format not in ("human", "csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        return self


def load_config(path):
    """Read a flat ``key = value`` config file mirroring the CLI flags."""
    cfg = RunConfig()
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if not hasattr(cfg, key):
                raise ValueError(f"unknown config key {key!r}")
            current = getattr(cfg, key)
            cfg = replace(cfg, **{key: value if isinstance(current, str) else int(value)})
    return cfg.validate()


def _case(family, m, n, quantity, engine_a, value_a, engine_b, value_b):
    va, vb = str(value_a), str(value_b)
    return VerificationCase(
        family=family, m=m, n=n, quantity=quantity,
        engine_a=engine_a, value_a=va, engine_b=engine_b, value_b=vb,
        outcome="pass" if va == vb else "fail")


def _guarded(family, m, n, quantity, engine_a, engine_b, thunk):
    """Run a two-engine comparison; exceptions become failing cases."""
    try:
        value_a, value_b = thunk()
    except Exception as exc:  # noqa: BLE001 -- engine failure is a case, not a crash
        return VerificationCase(
            family=family, m=m, n=n, quantity=quantity,
            engine_a=engine_a, value_a=f"error: {exc}",
            engine_b=engine_b, value_b="", outcome="fail")
    return _case(family, m, n, quantity, engine_a, value_a, engine_b, value_b)


def _poly_str(poly):
    return ";".join(f"{r}:{c}" for r, c in sorted(poly.items()))


def run_verification_suite(cfg=None):
    """Execute the full cross-check matrix; returns the ordered case list."""
    cfg = (cfg or RunConfig()).validate()
    cases = []
    add = cases.append

    # Oracle vs slice DP: counts and per-size histograms.
    oracle_families = (GridFamily.GRID, GridFamily.FAT_CYLINDER,
                       GridFamily.THIN_CYLINDER, GridFamily.MOBIUS)
    for fam in oracle_families:
        for m in range(2, cfg.oracle_m_max + 1):
            for n in range(2, cfg.oracle_n_max + 1):
                if m * n > cfg.enumeration_budget or m > cfg.dp_width_budget:
                    continue
                g = build(fam, m, n)
                add(_guarded(fam.value, m, n, "mis-count", "enumeration", "slice-dp",
                             lambda g=g: (len(list(enumerate_mis(g, cfg.enumeration_budget))),
                                          count_mis_dp(g, cfg.dp_width_budget))))
                add(_guarded(fam.value, m, n, "size-distribution",
                             "enumeration", "slice-dp",
                             lambda g=g: (
                                 _poly_str(Counter(x.bit_count() for x in
                                                   enumerate_mis(g, cfg.enumeration_budget))),
                                 _poly_str(size_polynomial_dp(g, cfg.dp_width_budget)))))

    # |MIS(grid 2xn)| = 2F(n): DP vs formula, and enumeration vs formula.
    for n in range(2, cfg.twobyn_n_max + 1):
        add(_guarded("grid", 2, n, "mis-count", "slice-dp", "fibonacci-formula",
                     lambda n=n: (count_mis_dp(build(GridFamily.GRID, 2, n)),
                                  formulas.mis_count_2xn(n))))
    for n in range(2, cfg.twobyn_oracle_n_max + 1):
        add(_guarded("grid", 2, n, "mis-count", "enumeration", "fibonacci-formula",
                     lambda n=n: (len(list(enumerate_mis(build(GridFamily.GRID, 2, n)))),
                                  formulas.mis_count_2xn(n))))

    # NIMIS: orbit partition vs closed forms, Burnside, orbit-size divisibility.
    for n in range(3, cfg.grid_nimis_n_max + 1):
        cases.extend(_nimis_cases(GridFamily.GRID, 2, n, formulas.nimis_2xn(n), cfg))
    for n in range(2, cfg.tube_nimis_n_max + 1):
        cases.extend(_nimis_cases(GridFamily.THIN_CYLINDER, 3, n,
                                  formulas.nimis_tube_3xn(n), cfg))
    for n in range(3, cfg.band_nimis_n_max + 1):
        cases.extend(_nimis_cases(GridFamily.FAT_CYLINDER, 2, n,
                                  strings.band_nimis_via_compositions(n), cfg))

    # Parity theorems.
    parity_instances = []
    for m in range(2, cfg.parity_grid_max + 1):
        for n in range(2, cfg.parity_grid_max + 1):
            parity_instances.append((GridFamily.GRID, m, n))
    for n in range(cfg.parity_grid_max + 1, cfg.parity_grid_2xn_max + 1):
        parity_instances.append((GridFamily.GRID, 2, n))
    for fam in (GridFamily.FAT_CYLINDER, GridFamily.THIN_CYLINDER,
                GridFamily.TORUS, GridFamily.MOBIUS):
        for m in range(2, cfg.parity_cyl_m_max + 1):
            for n in range(2, cfg.parity_cyl_n_max + 1):
                parity_instances.append((fam, m, n))
    for fam, m, n in parity_instances:
        if fam is GridFamily.TORUS:
            engine = "exhaustive-count-mod-2"
            thunk = (lambda fam=fam, m=m, n=n:
                     (count_mis_for_parity(build(fam, m, n), cfg.enumeration_budget) % 2, 0))
        else:
            engine = "slice-dp-mod-2"
            thunk = (lambda fam=fam, m=m, n=n:
                     (count_mis_dp(build(fam, m, n), cfg.dp_width_budget) % 2, 0))
        add(_guarded(fam.value, m, n, "parity", engine, "parity-theorem", thunk))

    # Total and average sizes.
    for n in range(2, cfg.totals_grid_n_max + 1):
        add(_guarded("grid", 2, n, "total-size", "convolution-formula", "slice-dp",
                     lambda n=n: (formulas.total_size_2xn(n),
                                  _dp_total(build(GridFamily.GRID, 2, n), cfg))))
        add(_guarded("grid", 2, n, "average-size", "exact-formula", "slice-dp",
                     lambda n=n: (formulas.average_2xn_exact(n),
                                  _dp_average(build(GridFamily.GRID, 2, n), cfg))))
    for n in range(3, cfg.totals_cyclic_n_max + 1):
        add(_guarded("fat-cylinder", 2, n, "mis-count", "string-count-formula", "slice-dp",
                     lambda n=n: (formulas.band_counts(n).mis_count,
                                  count_mis_dp(build(GridFamily.FAT_CYLINDER, 2, n)))))
        add(_guarded("fat-cylinder", 2, n, "total-size", "string-count-formula", "slice-dp",
                     lambda n=n: (formulas.band_counts(n).total_size,
                                  _dp_total(build(GridFamily.FAT_CYLINDER, 2, n), cfg))))
        add(_guarded("fat-cylinder", 2, n, "average-size", "exact-formula", "slice-dp",
                     lambda n=n: (formulas.band_counts(n).average,
                                  _dp_average(build(GridFamily.FAT_CYLINDER, 2, n), cfg))))
        add(_guarded("mobius", 2, n, "mis-count", "string-count-formula", "slice-dp",
                     lambda n=n: (formulas.mobius_counts(n).mis_count,
                                  count_mis_dp(build(GridFamily.MOBIUS, 2, n)))))
        add(_guarded("mobius", 2, n, "total-size", "string-count-formula", "slice-dp",
                     lambda n=n: (formulas.mobius_counts(n).total_size,
                                  _dp_total(build(GridFamily.MOBIUS, 2, n), cfg))))
        add(_guarded("mobius", 2, n, "average-size", "exact-formula", "slice-dp",
                     lambda n=n: (formulas.mobius_counts(n).average,
                                  _dp_average(build(GridFamily.MOBIUS, 2, n), cfg))))

    # Per-size distributions of the cyclic 2xn families vs the binomial form.
    for n in range(3, cfg.distribution_n_max + 1):
        add(_guarded("fat-cylinder", 2, n, "size-distribution",
                     "binomial-formula", "slice-dp",
                     lambda n=n: (_formula_poly(n, parity=0),
                                  _poly_str(size_polynomial_dp(
                                      build(GridFamily.FAT_CYLINDER, 2, n))))))
        add(_guarded("mobius", 2, n, "size-distribution",
                     "binomial-formula", "slice-dp",
                     lambda n=n: (_formula_poly(n, parity=1),
                                  _poly_str(size_polynomial_dp(
                                      build(GridFamily.MOBIUS, 2, n))))))

    # Occupancy-string fiberings: exactly 2-to-1 onto the characterised sets,
    # with the two preimages exchanged by the row flip.
    for n in range(2, cfg.strings_n_max + 1):
        add(_guarded("grid", 2, n, "string-bijection", "enumeration-fibering",
                     "characterised-set",
                     lambda n=n: _fibering_summary(GridFamily.GRID, n, "X", cfg)))
    for n in range(3, cfg.strings_n_max + 1):
        add(_guarded("fat-cylinder", 2, n, "string-bijection", "enumeration-fibering",
                     "characterised-set",
                     lambda n=n: _fibering_summary(GridFamily.FAT_CYLINDER, n, "Y", cfg)))
        add(_guarded("mobius", 2, n, "string-bijection", "enumeration-fibering",
                     "characterised-set",
                     lambda n=n: _fibering_summary(GridFamily.MOBIUS, n, "Z", cfg)))

    # Seeded spot checks of the MIS verifier against the bare definition.
    rng = random.Random(cfg.seed)
    for k in range(cfg.spot_checks):
        fam = oracle_families[rng.randrange(len(oracle_families))]
        m = rng.randint(2, 4)
        n = rng.randint(2, 6)
        g = build(fam, m, n)
        mask = rng.getrandbits(g.num_vertices)
        add(_guarded(fam.value, m, n, "mis-verdict", "verify-mis", "definition",
                     lambda g=g, mask=mask: (_verdict(verify_mis(g, mask)),
                                             _naive_verdict(g, mask))))

    cases.sort(key=lambda c: (c.family, c.m, c.n, c.quantity,
                              c.engine_a, c.engine_b, c.value_a))
    return cases


def _nimis_cases(fam, m, n, formula_value, cfg):
    """Orbit count vs formula, vs Burnside, and orbit-size divisibility."""
    try:
        g = build(fam, m, n)
        mis_list = list(enumerate_mis(g, cfg.enumeration_budget))
        group = symmetry.full_group(g)
        part = symmetry.orbit_partition(g, mis_list, group)
        fixed = sum(sum(1 for mask in mis_list
                        if symmetry.symmetric_under(mask, perm))
                    for perm in group.elements)
        burnside = Fraction(fixed, group.order)
        divisible = all(group.order % len(o) == 0 for o in part.orbits)
    except Exception as exc:  # noqa: BLE001
        bad = VerificationCase(family=fam.value, m=m, n=n, quantity="nimis-count",
                               engine_a="orbit-partition", value_a=f"error: {exc}",
                               engine_b="closed-formula", value_b="", outcome="fail")
        return [bad]
    return [
        _case(fam.value, m, n, "nimis-count", "orbit-partition", part.num_orbits,
              "closed-formula", formula_value),
        _case(fam.value, m, n, "nimis-count", "orbit-partition", part.num_orbits,
              "burnside-average", burnside),
        _case(fam.value, m, n, "orbit-sizes", "orbit-partition",
              "all-divide-group-order" if divisible else "divisibility-violated",
              "orbit-stabilizer", "all-divide-group-order"),
    ]


def _dp_total(g, cfg):
    return sum(r * c for r, c in size_polynomial_dp(g, cfg.dp_width_budget).items())


def _dp_average(g, cfg):
    poly = size_polynomial_dp(g, cfg.dp_width_budget)
    return Fraction(sum(r * c for r, c in poly.items()), sum(poly.values()))


def _formula_poly(n, parity):
    poly = {r: formulas.size_distribution_2xn_cyclic(n, r)
            for r in range(1, n + 1) if r % 2 == parity}
    return _poly_str({r: c for r, c in poly.items() if c})


def _fibering_summary(fam, n, kind, cfg):
    g = build(fam, 2, n)
    flip = symmetry.horizontal_flip(g)
    fibers = {}
    encode = strings.psi if fam is GridFamily.GRID else strings.psi_c
    for mask in enumerate_mis(g, cfg.enumeration_budget):
        fibers.setdefault(encode(g, mask), []).append(mask)
    two_to_one = all(len(v) == 2 for v in fibers.values())
    pairs = [sorted(v) for v in fibers.values() if len(v) == 2]
    h_paired = all(symmetry.apply_to_mask(flip, a) == b for a, b in pairs)
    valid = sorted(fibers) == sorted(strings.generate_strings(kind, n))
    observed = (f"fibers={len(fibers)};two-to-one={two_to_one};"
                f"h-paired={h_paired};image-set-match={valid}")
    expected = (f"fibers={strings.count_strings(kind, n)};two-to-one=True;"
                f"h-paired=True;image-set-match=True")
    return observed, expected


def _verdict(result):
    status, witness = result
    if status == VALID_MIS:
        return "valid-MIS"
    return status


def _naive_verdict(g, mask):
    members = [k for k in range(g.num_vertices) if mask >> k & 1]
    for k in members:
        if g.neighbor_masks[k] & mask:
            return NOT_INDEPENDENT
    for k in range(g.num_vertices):
        if mask >> k & 1:
            continue
        if g.neighbor_masks[k] & mask == 0:
            return NOT_MAXIMAL
    return "valid-MIS"


# ---------------------------------------------------------------------------
# Report rendering and round-trip parsing
# ---------------------------------------------------------------------------

def format_report(cases, output_format="human"):
    if output_format == "human":
        lines = []
        for c in cases:
            lines.append(f"{c.outcome.upper():4s} {c.family} {c.m}x{c.n} "
                         f"{c.quantity}: {c.engine_a}={c.value_a} "
                         f"{c.engine_b}={c.value_b}")
        failed = sum(1 for c in cases if not c.passed)
        lines.append(f"# {len(cases)} cases, {len(cases) - failed} passed, "
                     f"{failed} failed")
        return "\n".join(lines) + "\n"
    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for c in cases:
            writer.writerow([c.family, c.m, c.n, c.quantity, c.engine_a,
                             c.value_a, c.engine_b, c.value_b, c.outcome])
        return buf.getvalue()
    if output_format == "json":
        payload = [{"family": c.family, "m": c.m, "n": c.n,
                    "quantity": c.quantity, "engine_a": c.engine_a,
                    "value_a": c.value_a, "engine_b": c.engine_b,
                    "value_b": c.value_b, "outcome": c.outcome}
                   for c in cases]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown output format {output_format!r}")


def parse_report_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_HEADER.split(","):
        raise ValueError("missing or malformed CSV header")
    return [VerificationCase(family=r[0], m=int(r[1]), n=int(r[2]), quantity=r[3],
                             engine_a=r[4], value_a=r[5], engine_b=r[6],
                             value_b=r[7], outcome=r[8])
            for r in rows[1:]]


def parse_report_json(text):
    return [VerificationCase(**obj) for obj in json.loads(text)]


# ---------------------------------------------------------------------------
# Trend tables
# ---------------------------------------------------------------------------

def frac_to_decimal(fr, digits=12):
    """Exact truncated decimal rendering of a rational."""
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    whole, rem = divmod(fr.numerator, fr.denominator)
    frac_digits = rem * 10 ** digits // fr.denominator
    return f"{sign}{whole}.{frac_digits:0{digits}d}"


def trend_report(cfg=None, ratio_m2_max=14, ratio_m3_max=12,
                 avg_n_min=10, avg_n_max=40):
    """Rows tracking the NIMIS/MIS ratio toward 1/4 and A(G)/n toward
    phi/sqrt(5).

    Each row is (series, n, exact-value, decimal, deviation-decimal);
    instances beyond the budgets are marked skipped instead of failing.
    """
    cfg = (cfg or RunConfig()).validate()
    ref = formulas.phi_over_sqrt5_fraction(60)
    rows = []
    quarter = Fraction(1, 4)

    for n in range(3, ratio_m2_max + 1):
        ratio = Fraction(formulas.nimis_2xn(n), formulas.mis_count_2xn(n))
        rows.append(("nimis-ratio-grid-m2", n, str(ratio),
                     frac_to_decimal(ratio), frac_to_decimal(ratio - quarter)))
    for n in range(3, ratio_m3_max + 1):
        if 3 * n > cfg.enumeration_budget:
            rows.append(("nimis-ratio-grid-m3", n, "skipped", "skipped", "skipped"))
            continue
        g = build(GridFamily.GRID, 3, n)
        mis_list = list(enumerate_mis(g, cfg.enumeration_budget))
        orbits = symmetry.nimis_count(g, enumeration_budget=cfg.enumeration_budget)
        ratio = Fraction(orbits, len(mis_list))
        rows.append(("nimis-ratio-grid-m3", n, str(ratio),
                     frac_to_decimal(ratio), frac_to_decimal(ratio - quarter)))

    series = (("avg-over-n-grid", lambda n: formulas.average_2xn_exact(n)),
              ("avg-over-n-fat-cylinder", lambda n: formulas.band_counts(n).average),
              ("avg-over-n-mobius", lambda n: formulas.mobius_counts(n).average))
    for name, avg in series:
        for n in range(avg_n_min, avg_n_max + 1):
            value = avg(n) / n
            rows.append((name, n, str(value), frac_to_decimal(value),
                         frac_to_decimal(abs(value - ref))))
    return rows


def format_trend(rows, output_format="human"):
    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["series", "n", "exact", "decimal", "deviation"])
        writer.writerows(rows)
        return buf.getvalue()
    lines = [f"{series:28s} n={n:<3d} {dec:>16s}  dev={dev}"
             for series, n, _exact, dec, dev in rows]
    return "\n".join(lines) + "\n"
