"""
Experiment configuration files.

A config names a group, a sequence rule, an analysis and an optional bound
function, and is validated with pydantic before anything runs. JSON field
names use the dashed spelling (``tail-rule``, ``omega-cap``).

Example:
    ```json
    {
      "group": {"kind": "circle"},
      "sequence": {"rule": "geometric", "params": {"base": 3}},
      "analysis": "productive",
      "cfg": {"tolerance": "1/1024", "horizon": 48, "seed": 7}
    }
    ```
"""

from __future__ import annotations

import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .analysis import (
    abelian_fstar_equiv_test,
    bounded_subgroup_probe,
    check_cauchy_productive,
    check_f_cauchy_productive,
    check_f_productive,
    check_f_productive_set,
    check_left_cauchy,
    check_null_sequence,
    check_productive,
    product_support_criterion,
)
from .bounds import OMEGA, BoundFunction, ExtNat, TailKind
from .concrete import CirclePoint, IntTauP, PadicInt, basis_vector, transposition, value_from_json
from .exceptions import ConfigError, ProdlabError
from .families import build_a_n, monothetic_generators
from .groups import (
    GroupDescriptor,
    GroupKind,
    GroupSequence,
    bounded_int_seq_group,
    circle_group,
    cyclic_group,
    int_padic_group,
    padic_group,
    product_group,
    sym_fin_group,
)
from .suites import reordering_sequence
from .types import ExperimentReport
from .verdict import AnalysisConfig, ProductiveReport, Verdict

logger = logging.getLogger(__name__)

_TOLERANCE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)|\^\s*-\s*(\d+))?\s*$")


def parse_tolerance(value: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"num/den"``, ``"p^-k"`` or an integer into an exact Fraction.

    Example:
        >>> parse_tolerance("2^-10")
        Fraction(1, 1024)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    match = _TOLERANCE.match(value)
    if not match:
        raise ValueError(f"tolerance must look like 'n/d', 'p^-k' or an integer, got {value!r}")
    base, den, exp = match.groups()
    if den is not None:
        if int(den) == 0:
            raise ValueError("tolerance denominator is zero")
        return Fraction(int(base), int(den))
    if exp is not None:
        return Fraction(1, int(base) ** int(exp))
    return Fraction(int(base))


# ============================================================================
# Schema
# ============================================================================


ExtNatJson = Union[int, Literal["omega"]]


def _ext(a: ExtNatJson) -> ExtNat:
    return OMEGA if a == "omega" else a


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class GroupSpec(_Spec):
    kind: Literal[
        "padic", "circle", "int-padic-topology", "cyclic", "sym-fin", "product", "bounded-int-seq"
    ]
    p: Optional[int] = None
    n: Optional[int] = None
    depth: Optional[int] = None
    factors: Optional[list[GroupSpec]] = None

    def to_descriptor(self) -> GroupDescriptor:
        kind = GroupKind(self.kind)
        if kind is GroupKind.PADIC:
            return padic_group(_need(self.p, "group.p"), _need(self.depth, "group.depth"))
        if kind is GroupKind.INT_PADIC:
            return int_padic_group(_need(self.p, "group.p"))
        if kind is GroupKind.CIRCLE:
            return circle_group()
        if kind is GroupKind.CYCLIC:
            return cyclic_group(_need(self.n, "group.n"))
        if kind is GroupKind.SYM_FIN:
            return sym_fin_group()
        if kind is GroupKind.BOUNDED_INT_SEQ:
            return bounded_int_seq_group(_need(self.depth, "group.depth"))
        factors = _need(self.factors, "group.factors")
        return product_group(tuple(f.to_descriptor() for f in factors))


GroupSpec.model_rebuild()


class SequenceSpec(_Spec):
    rule: Literal[
        "transpositions",
        "powers",
        "geometric",
        "basis",
        "values",
        "kp-family",
        "monothetic",
        "halves-and-geometric",
    ]
    params: dict[str, Any] = Field(default_factory=dict)


class BoundSpec(_Spec):
    tail_rule: Literal["constant", "omega", "identity-plus", "table", "periodic"] = Field(
        alias="tail-rule"
    )
    prefix: list[ExtNatJson] = Field(default_factory=list)
    value: int = 0
    table: dict[int, ExtNatJson] = Field(default_factory=dict)
    default: ExtNatJson = 0
    period: list[ExtNatJson] = Field(default_factory=list)

    def to_bound(self) -> BoundFunction:
        return BoundFunction(
            prefix=tuple(_ext(a) for a in self.prefix),
            tail=TailKind(self.tail_rule),
            value=self.value,
            table=tuple(sorted((n, _ext(a)) for n, a in self.table.items())),
            default=_ext(self.default),
            period=tuple(_ext(a) for a in self.period),
        )


class ConfigSpec(_Spec):
    tolerance: Union[int, str]
    horizon: int = Field(ge=2)
    trials: int = Field(default=1, ge=1)
    seed: Optional[int] = None
    exhaustive_threshold: int = Field(default=256, ge=1, alias="exhaustive-threshold")
    omega_cap: int = Field(default=1000, ge=1, alias="omega-cap")
    star: bool = False
    bounds: Literal["composed", "positional"] = "composed"
    cutoff: Optional[int] = Field(default=None, ge=0)

    def to_analysis_config(self, seed: int) -> AnalysisConfig:
        return AnalysisConfig(
            parse_tolerance(self.tolerance),
            self.horizon,
            trials=self.trials,
            seed=seed,
            exhaustive_threshold=self.exhaustive_threshold,
            omega_cap=self.omega_cap,
        )


AnalysisName = Literal[
    "left-cauchy",
    "two-sided-cauchy",
    "null",
    "cauchy-productive",
    "productive",
    "f-cauchy-productive",
    "f-productive",
    "f-cauchy-productive-set",
    "f-productive-set",
    "abelian-equiv",
    "support-criterion",
    "bounded-probe",
]


class ExperimentConfig(_Spec):
    group: Optional[GroupSpec] = None
    sequence: Optional[SequenceSpec] = None
    analysis: AnalysisName
    f: Optional[BoundSpec] = None
    cfg: ConfigSpec
    output: Optional[str] = None


def _need(value: Any, field: str) -> Any:
    if value is None:
        raise ConfigError("field required for this group kind", field=field)
    return value


# ============================================================================
# Loading
# ============================================================================


def _dotted(loc: tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in loc)


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate a config document.

    Raises:
        ConfigError: On malformed JSON (with its line) or a schema
            violation (with the dotted field path).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigError(
            first["msg"],
            field=_dotted(first["loc"]),
            details={"errors": [{"field": _dotted(err["loc"]), "message": err["msg"]} for err in e.errors()]},
        ) from e
    try:
        parse_tolerance(config.cfg.tolerance)
    except ValueError as e:
        raise ConfigError(str(e), field="cfg.tolerance") from e
    return config


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    logger.debug("loading config %s", path)
    return parse_config(path.read_text(encoding="utf-8"))


# ============================================================================
# Sequence rules
# ============================================================================


RuleBuilder = Callable[[Optional[GroupDescriptor], dict[str, Any]], GroupSequence]


def _require_kind(G: Optional[GroupDescriptor], rule: str, *kinds: GroupKind) -> GroupDescriptor:
    if G is None or G.kind not in kinds:
        wanted = ", ".join(k.value for k in kinds)
        raise ConfigError(f"rule {rule!r} needs a group of kind {wanted}", field="group")
    return G


def _transpositions(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    G = _require_kind(G, "transpositions", GroupKind.SYM_FIN)
    return GroupSequence(G, lambda n: transposition(n, n + 1), "transpositions")


def _powers(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    """``unit · p^(n + shift)``."""
    G = _require_kind(G, "powers", GroupKind.PADIC, GroupKind.INT_PADIC)
    p, unit, shift = G.p, int(params.get("unit", 1)), int(params.get("shift", 0))
    if G.kind is GroupKind.PADIC:
        return GroupSequence(G, lambda n: PadicInt.from_int(unit * p ** (n + shift), p, G.depth), "powers")  # type: ignore[operator,arg-type]
    return GroupSequence(G, lambda n: IntTauP(p, unit * p ** (n + shift)), "powers")  # type: ignore[arg-type,operator]


def _geometric(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    """``numerator / base^(n+1)`` on the circle."""
    G = _require_kind(G, "geometric", GroupKind.CIRCLE)
    base, numerator = int(params.get("base", 3)), int(params.get("numerator", 1))
    if base < 2:
        raise ConfigError("base must be >= 2", field="sequence.params.base")
    return GroupSequence(G, lambda n: CirclePoint(Fraction(numerator, base ** (n + 1)) % 1), "geometric")


def _basis(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    G = _require_kind(G, "basis", GroupKind.PRODUCT, GroupKind.BOUNDED_INT_SEQ)
    value = params.get("value", 1)
    return GroupSequence(G, lambda n: basis_vector(G, n, value), "e_n")


def _values(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    if G is None:
        raise ConfigError("rule 'values' needs a group", field="group")
    raw = params.get("values")
    if not isinstance(raw, list):
        raise ConfigError("expected a list", field="sequence.params.values")
    try:
        values = [value_from_json(G, item) for item in raw]
    except ProdlabError as e:
        raise ConfigError(e.message, field="sequence.params.values") from e
    return GroupSequence.from_values(G, values, "values")


def _kp_family(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    depth = int(params.get("depth", 16))
    first = build_a_n(0, depth)
    return GroupSequence(first.owner, lambda n: build_a_n(n, depth), "a_n")


def _monothetic(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    gens = monothetic_generators(
        int(params.get("count", 16)), int(params.get("p", 3)), int(params.get("digits", 8))
    )
    return GroupSequence.from_values(gens[0].owner, gens, "monothetic")


def _halves_and_geometric(G: Optional[GroupDescriptor], params: dict[str, Any]) -> GroupSequence:
    return reordering_sequence()


SEQUENCE_RULES: dict[str, RuleBuilder] = {
    "transpositions": _transpositions,
    "powers": _powers,
    "geometric": _geometric,
    "basis": _basis,
    "values": _values,
    "kp-family": _kp_family,
    "monothetic": _monothetic,
    "halves-and-geometric": _halves_and_geometric,
}


def build_sequence(config: ExperimentConfig) -> GroupSequence:
    if config.sequence is None:
        raise ConfigError(f"analysis {config.analysis!r} needs a sequence", field="sequence")
    G = config.group.to_descriptor() if config.group else None
    return SEQUENCE_RULES[config.sequence.rule](G, config.sequence.params)


# ============================================================================
# Running
# ============================================================================


def _bound(config: ExperimentConfig) -> BoundFunction:
    if config.f is None:
        raise ConfigError(f"analysis {config.analysis!r} needs a bound function", field="f")
    return config.f.to_bound()


def _run(config: ExperimentConfig, cfg: AnalysisConfig) -> Union[Verdict, ProductiveReport]:
    name = config.analysis
    spec = config.cfg
    if name == "bounded-probe":
        return bounded_subgroup_probe(_bound(config), cfg)
    seq = build_sequence(config)
    if name == "left-cauchy":
        return check_left_cauchy(seq, cfg)
    if name == "two-sided-cauchy":
        return check_left_cauchy(seq, cfg, two_sided=True)
    if name == "null":
        return check_null_sequence(seq, cfg)
    if name == "cauchy-productive":
        return check_cauchy_productive(seq, cfg)
    if name == "productive":
        return check_productive(seq, cfg)
    if name == "f-cauchy-productive":
        return check_f_cauchy_productive(seq, _bound(config), cfg, star=spec.star)
    if name == "f-productive":
        return check_f_productive(seq, _bound(config), cfg, star=spec.star)
    if name in ("f-cauchy-productive-set", "f-productive-set"):
        return check_f_productive_set(
            seq, _bound(config), cfg, cauchy=name == "f-cauchy-productive-set", bounds=spec.bounds
        )
    if name == "abelian-equiv":
        return abelian_fstar_equiv_test(seq, _bound(config), cfg)
    # support-criterion: the first horizon + 1 terms form the family
    family = seq.take(cfg.horizon + 1)
    return product_support_criterion(family, cfg, cutoff=spec.cutoff)  # type: ignore[arg-type]


def run_experiment(
    config: ExperimentConfig, seed: int = 0
) -> tuple[ExperimentReport, list[dict[str, Any]]]:
    """Run the configured analysis; return the report and the distance trace.

    ``seed`` is used when the config does not set one.
    """
    seed = config.cfg.seed if config.cfg.seed is not None else seed
    cfg = config.cfg.to_analysis_config(seed)
    logger.info("running %s at horizon %d", config.analysis, cfg.horizon)
    result = _run(config, cfg)
    verdict = result.verdict if isinstance(result, ProductiveReport) else result
    report: ExperimentReport = {
        "analysis": config.analysis,
        "group": config.group.model_dump(by_alias=True, exclude_none=True) if config.group else {},
        "sequence": config.sequence.model_dump() if config.sequence else {},
        "seed": seed,
        "horizon": cfg.horizon,
        "tolerance": f"{cfg.tolerance.numerator}/{cfg.tolerance.denominator}",
        "verdict": verdict.to_dict(),
    }
    trace: list[dict[str, Any]] = []
    if isinstance(result, ProductiveReport):
        report["report"] = result.to_dict()
        trace = result.distance_trace
    return report, trace
