"""Verification workflows that bundle a claim, its inputs, a verdict and a
witness into one serializable report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .adjacent import adjacent_ideal, adjacent_minors, multidim_ideal
from .groebner import (BudgetExceeded, Ideal, check_groebner_basis, ideal_equal, intersect_all,
                       member, pairwise_incomparable, saturate)
from .poly import grid_ring, parse_polynomial
from .sequences import enumerate_prime_sequences, sequence_to_ideal

PASS, FAIL, BUDGET = "pass", "fail", "budget-exceeded"
EXIT_CODES = {PASS: 0, FAIL: 1, BUDGET: 2}


@dataclass
class VerificationReport:
    task: str
    inputs: dict
    verdict: str = PASS
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0
    char: int = 0

    def fail(self, witness):
        self.verdict = FAIL
        self.witnesses.append(witness)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_json(self) -> dict:
        return {"task": self.task, "inputs": self.inputs, "verdict": self.verdict,
                "witnesses": self.witnesses, "details": self.details,
                "seconds": round(self.seconds, 3), "char": self.char}

    def lines(self) -> list:
        out = [f"task={self.task} char={self.char} verdict={self.verdict} "
               f"seconds={self.seconds:.2f}"]
        for k in sorted(self.details):
            out.append(f"  {k}: {self.details[k]}")
        for w in self.witnesses:
            out.append(f"  witness: {w}")
        return out


def _run(task, inputs, char, body) -> VerificationReport:
    rep = VerificationReport(task, inputs, char=char)
    t0 = time.perf_counter()
    try:
        body(rep)
    except BudgetExceeded as exc:
        rep.verdict = BUDGET
        rep.witnesses.append(str(exc))
    rep.seconds = time.perf_counter() - t0
    if rep.verdict == FAIL and not rep.witnesses:
        raise AssertionError("a failing report must carry a witness")
    return rep


def _gammas(m, n):
    return enumerate_prime_sequences(m, n)


def run_verify_decomposition(m: int, n: int, char: int = 0, budget=None) -> VerificationReport:
    """Intersection of all P_Gamma equals I_mn(m), and the P_Gamma are incomparable."""
    def body(rep):
        gammas = _gammas(m, n)
        Ps = [sequence_to_ideal(g, char) for g in gammas]
        I = adjacent_ideal(m, n, m, char)
        rep.details["components"] = len(Ps)
        inter = intersect_all(Ps, budget=budget)
        rep.details["intersection_generators"] = len(inter.groebner())
        if not ideal_equal(inter, I):
            extra = next((str(g) for g in inter.groebner() if not member(g, I)), None)
            missing = next((str(g) for g in I.generators if not member(g, inter)), None)
            rep.fail({"not_in_I": extra, "not_in_intersection": missing})
        if len(Ps) > 1:
            ok, pair = pairwise_incomparable(Ps)
            rep.details["incomparable"] = ok
            if not ok:
                rep.fail({"contained": [str(gammas[pair[0]]), str(gammas[pair[1]])]})
    return _run("decomposition", {"m": m, "n": n}, char, body)


def run_verify_incomparable(m: int, n: int, char: int = 0) -> VerificationReport:
    def body(rep):
        gammas = _gammas(m, n)
        Ps = [sequence_to_ideal(g, char) for g in gammas]
        rep.details["components"] = len(Ps)
        ok, pair = pairwise_incomparable(Ps)
        if not ok:
            rep.fail({"contained": [str(gammas[pair[0]]), str(gammas[pair[1]])]})
    return _run("incomparable", {"m": m, "n": n}, char, body)


def run_verify_gb(m: int, n: int, char: int = 0) -> VerificationReport:
    """Generators of every P_Gamma form a GB with squarefree leading terms; the
    leading terms of the adjacent maximal minors are pairwise coprime."""
    def body(rep):
        gammas = _gammas(m, n)
        rep.details["sequences"] = len(gammas)
        pairs = 0
        for g in gammas:
            P = sequence_to_ideal(g, char)
            chk = check_groebner_basis(P.generators)
            pairs += chk.pairs_checked
            if not chk:
                i, j = chk.pair
                rep.fail({"gamma": str(g), "pair": [str(P.generators[i]), str(P.generators[j])],
                          "remainder": str(chk.remainder)})
                continue
            leads = [f.leading_monomial() for f in P.generators]
            bad = next((f for f, e in zip(P.generators, leads) if max(e) > 1), None)
            if bad is not None:
                rep.fail({"gamma": str(g), "non_squarefree_lead": str(bad)})
        rep.details["pairs_checked"] = pairs
        if n >= m:
            minors = adjacent_minors(m, n, m, grid_ring(m, n, char))
            leads = [f.leading_monomial() for f in minors]
            for a in range(len(leads)):
                for b in range(a):
                    if any(x and y for x, y in zip(leads[a], leads[b])):
                        rep.fail({"non_coprime_leads": [str(minors[b]), str(minors[a])]})
    return _run("gb", {"m": m, "n": n}, char, body)


def run_verify_saturation(shape, char: int = 0, expect=None) -> VerificationReport:
    """I_shape(2) : (product of all variables)^infinity.  With ``expect`` (extra
    generator texts) the result must equal I + <expect>."""
    shape = tuple(shape)

    def body(rep):
        I = multidim_ideal(shape, char)
        prod = I.ring.one()
        for v in I.ring.variables:
            prod = prod * I.ring.var(v)
        sat = saturate(I, prod)
        gb = sat.groebner()
        rep.details["generators"] = [str(g) for g in gb]
        rep.details["already_saturated"] = ideal_equal(sat, I)
        if expect is not None:
            extra = [parse_polynomial(t, I.ring) for t in expect]
            target = I + Ideal(I.ring, extra)
            if not ideal_equal(sat, target):
                w = next((str(g) for g in gb if not member(g, target)), None)
                rep.fail({"saturation_generator_outside_expected": w})
    return _run("saturation", {"shape": list(shape), "expect": expect}, char, body)
