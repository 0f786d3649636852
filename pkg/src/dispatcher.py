"""
Command dispatch for berkram.

Maps each command of the command line onto the library call that computes
it and turns the result into a report: a JSON-ready dict of exact rational
strings. Each handler also says whether the command's own assertions held,
which becomes the exit status.

Author: Tom Pravetz
License: MIT
"""

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from .apps import app2_check, rolle_check, surjectivity_check
from .auxram import (
    TAU,
    TFRAK,
    aux_coeffs,
    aux_direct,
    classify_direction,
    is_ramified,
    min_root_radius,
    multiplicity,
    profile_segment,
    ramified_intervals,
    ramified_reach,
    small_root_bound,
    t_frak,
    tau,
)
from .berk import BerkPoint
from .config import Config
from .errors import NormalizationViolated, SchemaError, Undecidable
from .fixtures import run_example
from .hull import (
    binomial_val_enumerate,
    binomial_val_min,
    check_theorem_d,
    check_theorem_e,
    critical_set,
    dist_to_hull,
    fuzz_analyze,
    in_tube,
    is_tamely_ramified,
    sample_points,
)
from .job_spec import JobSpec
from .newton import newton_polygon, root_valuations
from .poly import Poly, taylor_shift, wronskian
from .valfield import ext_to_str

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """
    Report of one command.

    Attributes:
        report: JSON-ready report body
        passed: Whether the command's assertions held
    """

    report: Dict[str, Any]
    passed: bool = True


class CommandDispatcher:
    """
    Runs jobs against the library.

    Attributes:
        config: Limits passed on to the library calls
        handlers: Command name to handler
    """

    def __init__(self, config: Optional[Config] = None) -> None:
        self.config: Config = config or Config()
        self.handlers: Dict[str, Callable[[JobSpec], CommandResult]] = {
            "aux": self.handle_aux,
            "wronskian": self.handle_wronskian,
            "newton": self.handle_newton,
            "tau": self.handle_tau,
            "tfrak": self.handle_tfrak,
            "profile": self.handle_profile,
            "mult": self.handle_mult,
            "ramified": self.handle_ramified,
            "hulldist": self.handle_hulldist,
            "tube": self.handle_tube,
            "critical": self.handle_critical,
            "thmD": self.handle_thm_d,
            "thmE": self.handle_thm_e,
            "fuzz": self.handle_fuzz,
            "binomlemma": self.handle_binomlemma,
            "rolle": self.handle_rolle,
            "surjective": self.handle_surjective,
            "example": self.handle_example,
            "locus": self.handle_locus,
            "bound": self.handle_bound,
        }

    def run(self, job: JobSpec) -> CommandResult:
        """
        Run one job.

        Raises:
            SchemaError: If the command is unknown or a parameter is missing
            BerkramError: Whatever the library raises for this input
        """
        handler = self.handlers.get(job.command)
        if handler is None:
            raise SchemaError(f"unknown command {job.command!r}")
        logger.info(f"Running {job.command} on {job.phi}")
        result = handler(job)
        result.report["command"] = job.command
        if job.phi is not None:
            result.report["map"] = job.phi.to_json()
        logger.info(f"{job.command} finished, passed={result.passed}")
        return result

    # Parameter access

    @staticmethod
    def _require(job: JobSpec, name: str) -> Any:
        if name not in job.params:
            raise SchemaError(f"command {job.command} needs --{name}")
        return job.params[name]

    def _disk(self, job: JobSpec) -> BerkPoint:
        if "point" not in job.params:
            raise SchemaError(f"command {job.command} needs --point a,s")
        return job.params["point"]

    def _finite_disk(self, job: JobSpec) -> BerkPoint:
        x = self._disk(job)
        if x.is_classical:
            raise SchemaError(f"command {job.command} needs a finite radius, got {x}")
        return x

    # Handlers

    def handle_aux(self, job: JobSpec) -> CommandResult:
        aux = aux_coeffs(job.phi)
        direct = aux_direct(job.phi)
        agrees = aux == direct
        if not agrees:
            logger.error(f"Auxiliary polynomial formulas disagree for {job.phi}")
        return CommandResult(
            {"aux": aux.to_json(), "degree": aux.degree, "directAgrees": agrees},
            agrees,
        )

    def handle_wronskian(self, job: JobSpec) -> CommandResult:
        return CommandResult({"wronskian": wronskian(job.phi).to_json()})

    def handle_newton(self, job: JobSpec) -> CommandResult:
        which = job.params.get("of", "f")
        sources: Dict[str, Poly] = {"f": job.phi.f, "g": job.phi.g, "wronskian": wronskian(job.phi)}
        if which not in sources:
            raise SchemaError(f"--of must be one of {sorted(sources)}, got {which!r}")
        P = sources[which]
        if "center" in job.params:
            P = taylor_shift(P, job.params["center"])
        polygon = newton_polygon(P)
        return CommandResult(
            {
                "of": which,
                "polygon": polygon.to_json(),
                "rootValuations": [[ext_to_str(v), n] for v, n in root_valuations(polygon)],
            }
        )

    def handle_tau(self, job: JobSpec) -> CommandResult:
        return CommandResult({"tau": ext_to_str(tau(job.phi, self._disk(job)))})

    def handle_tfrak(self, job: JobSpec) -> CommandResult:
        return CommandResult({"tfrak": ext_to_str(t_frak(job.phi, self._disk(job)))})

    def handle_profile(self, job: JobSpec) -> CommandResult:
        center = job.params.get("center", job.domain.zero())
        s0 = self._require(job, "s0")
        s1 = self._require(job, "s1")
        which = job.params.get("which", TFRAK)
        if which not in (TFRAK, TAU):
            raise SchemaError(f"--which must be {TFRAK} or {TAU}, got {which!r}")
        profile = profile_segment(job.phi, center, s0, s1, which)
        value, argmax = profile.maximum()
        return CommandResult(
            {
                "which": which,
                "center": profile.center.to_json(),
                "profile": profile.to_json(),
                "breakpoints": [ext_to_str(s) for s in profile.breakpoints],
                "maximum": {"value": ext_to_str(value), "at": ext_to_str(argmax)},
            }
        )

    def handle_mult(self, job: JobSpec) -> CommandResult:
        x = self._disk(job)
        m = multiplicity(job.phi, x, self.config.reduction_max_steps)
        return CommandResult({"multiplicity": m, "pointType": x.point_type})

    def handle_ramified(self, job: JobSpec) -> CommandResult:
        x = self._disk(job)
        return CommandResult({"ramified": is_ramified(job.phi, x, self.config.reduction_max_steps)})

    def handle_hulldist(self, job: JobSpec) -> CommandResult:
        crit = critical_set(job.phi, self.config.hensel_precision, self.config.root_candidate_limit)
        return CommandResult({"distance": ext_to_str(dist_to_hull(job.phi, self._disk(job), crit))})

    def handle_tube(self, job: JobSpec) -> CommandResult:
        x = self._disk(job)
        r = self._require(job, "r")
        return CommandResult(
            {
                "inTube": in_tube(job.phi, x, r),
                "r": ext_to_str(r),
                "distance": ext_to_str(dist_to_hull(job.phi, x)),
            }
        )

    def handle_critical(self, job: JobSpec) -> CommandResult:
        crit = critical_set(job.phi, self.config.hensel_precision, self.config.root_candidate_limit)
        try:
            tame: Optional[bool] = is_tamely_ramified(job.phi, crit)
        except Undecidable:
            tame = None
        return CommandResult({"critical": crit.to_json(), "tame": tame})

    def handle_thm_d(self, job: JobSpec) -> CommandResult:
        count = job.params.get("samples", 100)
        seed = job.params.get("seed", 0)
        samples = sample_points(job.domain, count, random.Random(seed))
        report = check_theorem_d(job.phi, samples, self.config.sweep_workers, self.config.reduction_max_steps)
        body = report.to_json()
        body.update({"samples": count, "seed": seed})
        return CommandResult(body, report.passed)

    def handle_thm_e(self, job: JobSpec) -> CommandResult:
        center = job.params.get("center", job.domain.zero())
        segment = (center, self._require(job, "s0"), self._require(job, "s1"))
        count = job.params.get("samples", 100)
        seed = job.params.get("seed", 0)
        samples = sample_points(job.domain, count, random.Random(seed))
        report = check_theorem_e(
            job.phi, [segment], samples, self.config.sweep_workers, self.config.reduction_max_steps
        )
        body = report.to_json()
        body.update({"samples": count, "seed": seed})
        body["segment"] = {"center": center.to_json(), "s0": ext_to_str(segment[1]), "s1": ext_to_str(segment[2])}
        return CommandResult(body, report.passed)

    def handle_fuzz(self, job: JobSpec) -> CommandResult:
        if not job.phi.is_polynomial:
            raise NormalizationViolated(f"fuzz needs a polynomial, got {job.phi}")
        report = fuzz_analyze(job.phi.f, self._require(job, "delta"))
        return CommandResult({"fuzz": report.to_json()}, report.agrees)

    def handle_binomlemma(self, job: JobSpec) -> CommandResult:
        p = job.domain.p
        if "m" in job.params:
            ms = [job.params["m"]]
        else:
            ms = list(range(2, 201))
        cases = []
        agrees = True
        for m in ms:
            low, argmin = binomial_val_min(m, p)
            enumerated, argmins = binomial_val_enumerate(m, p)
            ok = low == enumerated and argmin in argmins
            agrees = agrees and ok
            if not ok:
                logger.error(f"Binomial minimum disagrees at m={m}, p={p}: {low} vs {enumerated}")
            if len(ms) == 1 or not ok:
                cases.append(
                    {
                        "m": m,
                        "min": ext_to_str(low),
                        "argmin": argmin,
                        "enumeratedMin": ext_to_str(enumerated),
                        "enumeratedArgmins": argmins,
                    }
                )
        return CommandResult(
            {"p": p, "mRange": [ms[0], ms[-1]], "agrees": agrees, "cases": cases},
            agrees,
        )

    def handle_rolle(self, job: JobSpec) -> CommandResult:
        x = self._finite_disk(job)
        report = rolle_check(job.phi, x.center, x.s, job.params.get("shift"))
        passed = report.verdict or report.probe
        return CommandResult({"rolle": report.to_json()}, passed)

    def handle_surjective(self, job: JobSpec) -> CommandResult:
        x = self._finite_disk(job)
        report = surjectivity_check(job.phi, x.center, x.s)
        body: Dict[str, Any] = {"surjectivity": report.to_json()}
        passed = True
        if job.domain.is_padic:
            application = app2_check(job.phi, x.center, x.s)
            body["criticalPoint"] = application
            passed = application["verdict"]
        return CommandResult(body, passed)

    def handle_example(self, job: JobSpec) -> CommandResult:
        name = self._require(job, "name")
        try:
            result = run_example(
                name,
                job.domain.p,
                job.params.get("n", 1),
                self.config.reduction_max_steps,
            )
        except ValueError as e:
            raise SchemaError(str(e)) from e
        return CommandResult(result.to_json(), result.passed)

    def handle_locus(self, job: JobSpec) -> CommandResult:
        center = job.params.get("center", job.domain.zero())
        s0 = self._require(job, "s0")
        s1 = self._require(job, "s1")
        cells = ramified_intervals(job.phi, center, s0, s1, self.config.reduction_max_steps)
        reference = job.params.get("ref", s0)
        body: Dict[str, Any] = {
            "cells": [cell.to_json() for cell in cells],
            "reach": ext_to_str(ramified_reach(cells, reference)),
            "reachFrom": ext_to_str(reference),
        }
        if job.phi.degree > 1:
            body["profile"] = profile_segment(job.phi, center, s0, s1, TFRAK).to_json()
        return CommandResult(body)

    def handle_bound(self, job: JobSpec) -> CommandResult:
        x = self._finite_disk(job)
        aux = aux_coeffs(job.phi)
        body: Dict[str, Any] = {"smallRootBound": ext_to_str(small_root_bound(job.phi, x, aux))}
        if "y" in job.params:
            y = job.params["y"]
            body["minRootRadius"] = ext_to_str(min_root_radius(job.phi, y, aux))
            body["direction"] = classify_direction(job.phi, x, y, aux).value
        return CommandResult(body)

