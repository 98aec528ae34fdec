"""End-to-end driver: a dense minor or a large independent set, with certificates.

The run has three stages:

1. strip the vertices of degree at least ``2d``;
2. try to certify a minor of average degree at least ``d``: the graph itself,
   the radius-3 ball route with ``k = 1``, and the peel / power-graph route
   with ``k`` close to linear in ``d``;
3. otherwise grow an independent set on the stripped graph by the
   sparse-neighbourhood recursion.

``d`` is Thomason's threshold ``t sqrt(ln t) / 3``, so a minor outcome means
the input cannot be ``K_t``-minor-free for large ``t``. Every number in the
result is recomputed from its certificate.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import GraphInputError, ParameterError, ValidationError
from .generators import rng_stream
from .graph import Graph, average_degree, graph_hash, is_triangle_free
from .indep_engine import (
    IndependentSetCertificate,
    PeelParams,
    peel_low_degree,
    recursive_independent_set,
    strip_high_degree,
)
from .minor_engine import (
    DEFAULT_TRIALS,
    MinorCertificate,
    MinorModel,
    dense_minor_via_balls,
    derive_params,
    extract_dense_minor,
    identity_model,
    validate_minor_model,
)
from .short_paths import short_path_power

__all__ = [
    "REPORT_VERSION",
    "DEFAULT_CONSTANTS",
    "EPSILON_CAP",
    "DichotomyConfig",
    "DichotomyResult",
    "thomason_threshold",
    "dichotomy",
    "report",
    "report_json",
    "report_text",
    "parse_report",
]

REPORT_VERSION = "1"
EPSILON_CAP = 1 / 26
LOG_BASE = "natural"

DEFAULT_CONSTANTS = {
    "c_ball": 2800.0,
    "c_turan_factor": 2700.0,
    "c_regime": 324.0,
    "c_final": 5600.0,
    "c_paths_div": 16.0,
}


def thomason_threshold(t: int) -> float:
    """Average degree ``t sqrt(ln t) / 3`` that forces a ``K_t`` minor for large ``t``."""
    if t < 2:
        raise GraphInputError(f"t must be at least 2, got {t}")
    return t * math.sqrt(math.log(t)) / 3


@dataclass(frozen=True)
class DichotomyConfig:
    t: int
    epsilon: float = 0.01
    constant_overrides: dict[str, float] = field(default_factory=dict)
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    max_set_size: int = 8

    def __post_init__(self):
        if int(self.t) != self.t or self.t < 2:
            raise ParameterError(f"t must be an integer >= 2, got {self.t}")
        if not 0 < self.epsilon < 1:
            raise ParameterError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.trials < 1:
            raise ParameterError(f"trials must be positive, got {self.trials}")
        for key, value in self.constant_overrides.items():
            if key not in DEFAULT_CONSTANTS:
                raise ParameterError(f"unknown constant {key!r}; known: {', '.join(DEFAULT_CONSTANTS)}")
            if not value > 0:
                raise ParameterError(f"constant {key} must be positive, got {value}")

    @property
    def constants(self) -> dict[str, float]:
        return {**DEFAULT_CONSTANTS, **{k: float(v) for k, v in self.constant_overrides.items()}}

    @property
    def epsilon_prime(self) -> float:
        return (self.epsilon + EPSILON_CAP) / 2

    @property
    def epsilon_in_range(self) -> bool:
        return self.epsilon < EPSILON_CAP

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "epsilon": self.epsilon,
            "constant_overrides": dict(sorted(self.constant_overrides.items())),
            "trials": self.trials,
            "seed": self.seed,
            "max_set_size": self.max_set_size,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DichotomyConfig:
        return cls(
            t=data["t"],
            epsilon=data.get("epsilon", 0.01),
            constant_overrides=dict(data.get("constant_overrides", {})),
            trials=data.get("trials", DEFAULT_TRIALS),
            seed=data.get("seed", 0),
            max_set_size=data.get("max_set_size", 8),
        )


@dataclass(frozen=True)
class DichotomyResult:
    outcome: str
    certificate: MinorCertificate | IndependentSetCertificate
    config: DichotomyConfig
    d_target: float
    bound_claimed: float
    bound_achieved: float
    preconditions_met: bool
    trace: list[dict[str, Any]]

    @property
    def host(self) -> Graph:
        if isinstance(self.certificate, MinorCertificate):
            return self.certificate.model.host
        return self.certificate.host

    def revalidate(self) -> None:
        """Recheck the certificate and the figures derived from it."""
        n = self.host.n
        if self.outcome == "minor":
            fresh = self.certificate.revalidate()
            if fresh.achieved_average_degree < self.d_target:
                raise ValidationError("minor certificate is below the target average degree")
            expected = fresh.achieved_average_degree / self.d_target
        else:
            self.certificate.verify()
            expected = _independent_ratio(self.certificate.size, n, self.config)
        if not math.isclose(expected, self.bound_achieved, rel_tol=1e-12, abs_tol=1e-12):
            raise ValidationError("bound_achieved does not match the certificate")


def _independent_ratio(size: int, n: int, config: DichotomyConfig) -> float:
    return size * config.t ** (1 - config.epsilon) / n


def _stage_seed(seed: int, stage: str) -> int:
    return int(rng_stream(seed, f"dichotomy/{stage}").integers(1 << 62))


def _lift_minor(G: Graph, cert: MinorCertificate, old_ids: tuple[int, ...]) -> MinorCertificate:
    """Re-express a minor found in an induced subgraph in terms of ``G`` and revalidate."""
    model = MinorModel.from_branches(G, ([old_ids[v] for v in b] for b in cert.model.branches))
    return validate_minor_model(G, model)


def dichotomy(G: Graph, config: DichotomyConfig) -> DichotomyResult:
    if G.n == 0:
        raise GraphInputError("dichotomy needs a nonempty graph")
    if not is_triangle_free(G):
        raise GraphInputError("dichotomy needs a triangle-free graph")
    consts = config.constants
    t, eps = config.t, config.epsilon
    d = thomason_threshold(t)
    eps1 = config.epsilon_prime
    trace: list[dict[str, Any]] = []
    preconditions = (
        config.epsilon_in_range
        and d ** (1 - 26 * eps1) >= 1e7
        and t ** (1 - eps) >= consts["c_final"] * d ** (1 - eps1)
    )
    trace.append(
        {
            "stage": "setup",
            "n": G.n,
            "m": G.m,
            "d": d,
            "log_base": LOG_BASE,
            "epsilon": eps,
            "epsilon_prime": eps1,
            "epsilon_in_range": config.epsilon_in_range,
            "constants": consts,
            "preconditions_met": preconditions,
        }
    )

    stripped, kept, Z = strip_high_degree(G, d)
    trace.append({"stage": "strip", "removed": len(Z), "remaining": stripped.n, "max_degree_bound": 2 * d})

    cert = _minor_stage(G, stripped, kept, d, eps1, config, consts, trace)
    if cert is not None:
        return _finish(G, "minor", cert, config, d, preconditions, trace)

    seed = _stage_seed(config.seed, "recursion")
    tau = consts["c_ball"] * d ** (1 - eps1)
    if stripped.n:
        inner = recursive_independent_set(
            stripped,
            d,
            eps1,
            tau,
            config.trials,
            seed,
            max_size=config.max_set_size,
            c_ball=consts["c_ball"],
        )
        members = tuple(kept[v] for v in inner.members)
    else:
        members = ()
    indep = IndependentSetCertificate(G, members, "recursion")
    trace.append(
        {
            "stage": "recursion",
            "seed": seed,
            "tau": tau,
            "size": indep.size,
        }
    )
    return _finish(G, "independent_set", indep, config, d, preconditions, trace)


def _minor_stage(G, stripped, kept, d, eps1, config, consts, trace) -> MinorCertificate | None:
    # the graph is a minor of itself
    avg = average_degree(G)
    trace.append({"stage": "minor_identity", "average_degree": avg, "found": avg >= d})
    if avg >= d:
        return validate_minor_model(G, identity_model(G))
    if stripped.n == 0:
        return None

    seed = _stage_seed(config.seed, "balls")
    check = dense_minor_via_balls(stripped, d, eps1, config.trials, seed, c_ball=consts["c_ball"])
    trace.append(
        {
            "stage": "minor_balls",
            "seed": seed,
            "threshold": check.threshold,
            "min_ball": check.min_ball_size,
            "witness_vertex": kept[check.witness_vertex],
            "balls_large": check.balls_large,
            "note": check.note,
            "found": check.certificate is not None,
        }
    )
    if check.certificate is not None and check.certificate.achieved_average_degree >= d:
        return _lift_minor(G, check.certificate, kept)

    beta = gamma = 2 * eps1
    peel = PeelParams(beta, gamma, d)
    core, core_ids, centers = peel_low_degree(stripped, peel.d0)
    record: dict[str, Any] = {
        "stage": "minor_peel",
        "beta": beta,
        "gamma": gamma,
        "d0": peel.d0,
        "peel_preconditions_met": peel.preconditions_met,
        "centers": centers.size,
        "core_n": core.n,
        "found": False,
    }
    trace.append(record)
    if core.n == 0:
        return None
    k = math.floor(d ** (1 - 3 * beta - 2 * gamma) / consts["c_paths_div"])
    record["k"] = k
    if k < 1:
        record["skipped"] = "k < 1"
        return None
    power = short_path_power(core, k)
    power_avg = 2 * len(power.power_edges) / core.n
    needed = d ** (2 - 2 * beta - 2 * gamma) / 4
    record.update(power_average_degree=power_avg, power_threshold=needed)
    if power_avg < needed:
        return None
    try:
        params = derive_params(
            d, beta + gamma, k, c_regime=consts["c_regime"], c_small=consts["c_turan_factor"]
        )
    except ParameterError as exc:
        record["skipped"] = str(exc)
        return None
    seed = _stage_seed(config.seed, "peel")
    record.update(seed=seed, params=params.to_dict())
    cert = extract_dense_minor(core, params, config.trials, seed)
    if cert is None:
        return None
    lifted = _lift_minor(G, _lift_minor(stripped, cert, core_ids), kept)
    record["found"] = True
    return lifted


def _finish(G, outcome, cert, config, d, preconditions, trace) -> DichotomyResult:
    if outcome == "minor":
        achieved = cert.achieved_average_degree / d
    else:
        achieved = _independent_ratio(cert.size, G.n, config)
    result = DichotomyResult(
        outcome=outcome,
        certificate=cert,
        config=config,
        d_target=d,
        bound_claimed=G.n / config.t ** (1 - config.epsilon),
        bound_achieved=achieved,
        preconditions_met=preconditions,
        trace=trace,
    )
    result.revalidate()
    return result


# -- reports ---------------------------------------------------------------------


def report(result: DichotomyResult) -> dict[str, Any]:
    """JSON-ready report; :func:`parse_report` inverts it given the same graph."""
    return {
        "version": REPORT_VERSION,
        "input_hash": graph_hash(result.host),
        "config": result.config.to_dict(),
        "outcome": result.outcome,
        "certificate": result.certificate.to_dict(),
        "d_target": result.d_target,
        "log_base": LOG_BASE,
        "bound_claimed": result.bound_claimed,
        "bound_achieved": result.bound_achieved,
        "preconditions_met": result.preconditions_met,
        "revalidated": True,
        "trace": result.trace,
    }


def report_json(result: DichotomyResult, indent: int | None = 2) -> str:
    return json.dumps(report(result), indent=indent, sort_keys=True)


def report_text(result: DichotomyResult) -> str:
    c = result.config
    lines = [
        f"dichotomy  t={c.t}  epsilon={c.epsilon}  seed={c.seed}  trials={c.trials}",
        f"graph      n={result.host.n}  m={result.host.m}  hash={graph_hash(result.host)[:16]}",
        f"target     d = t*sqrt(ln t)/3 = {result.d_target:.6g}",
        "constants  " + ", ".join(f"{k}={v:g}" for k, v in c.constants.items()),
        f"asymptotic preconditions met: {'yes' if result.preconditions_met else 'no'}",
    ]
    if result.outcome == "minor":
        cert = result.certificate
        lines.append(
            f"outcome    MINOR with {cert.quotient_n} branch sets, average degree "
            f"{cert.achieved_average_degree:.6g} >= d"
        )
    else:
        lines.append(
            f"outcome    INDEPENDENT SET of size {result.certificate.size}; "
            f"size * t^(1-eps) / n = {result.bound_achieved:.6g} (claim: >= 1)"
        )
    lines.append("stages:")
    for rec in result.trace:
        extras = ", ".join(f"{k}={_short(v)}" for k, v in rec.items() if k != "stage")
        lines.append(f"  - {rec.get('stage', '?')}: {extras}")
    lines.append("certificate revalidated: yes")
    return "\n".join(lines)


def _short(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, dict):
        return "{...}"
    return str(value)


def parse_report(data: dict[str, Any] | str, G: Graph) -> DichotomyResult:
    """Rebuild a :class:`DichotomyResult` from :func:`report` output and the input graph."""
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("version") != REPORT_VERSION:
        raise ValidationError(f"unsupported report version {data.get('version')!r}")
    if data["input_hash"] != graph_hash(G):
        raise ValidationError("report was produced for a different graph")
    config = DichotomyConfig.from_dict(data["config"])
    body = data["certificate"]
    if data["outcome"] == "minor":
        cert = validate_minor_model(G, MinorModel.from_branches(G, body["branches"]))
        stored = (body["quotient_n"], body["quotient_m"], body["achieved_average_degree"])
        if stored != (cert.quotient_n, cert.quotient_m, cert.achieved_average_degree):
            raise ValidationError("stored minor statistics do not match the branch sets")
    elif data["outcome"] == "independent_set":
        cert = IndependentSetCertificate(G, tuple(body["members"]), body["provenance"])
    else:
        raise ValidationError(f"unknown outcome {data['outcome']!r}")
    result = DichotomyResult(
        outcome=data["outcome"],
        certificate=cert,
        config=config,
        d_target=data["d_target"],
        bound_claimed=data["bound_claimed"],
        bound_achieved=data["bound_achieved"],
        preconditions_met=data["preconditions_met"],
        trace=data["trace"],
    )
    result.revalidate()
    return result
