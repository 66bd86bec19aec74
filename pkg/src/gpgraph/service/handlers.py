"""Handler functions shared by the FastAPI app and the in-process CLI."""

from __future__ import annotations

from typing import Optional

from .. import __version__, algebra
from ..cayley import (
    DigraphCensus,
    build_named_construction,
    digraph_to_dot,
    is_2gen_monoid_graph,
    is_group_graph,
    loopless_semigroup_obstruction,
    underlying_graph,
    verify_representation,
)
from ..core_classifier import (
    CoreStatus,
    build_retraction,
    classify_core,
    core_params,
    has_spoked_min_odd_cycle,
    is_endomorphism_transitive,
    retraction_target,
)
from ..gp_core import GPParams, GraphError, build_gp, is_bipartite_gp
from ..hom_engine import (
    BudgetExhaustedError,
    is_core_oracle,
    is_endo_transitive_oracle,
)
from ..symmetry import (
    Permutation,
    aut_group_bruteforce,
    expected_aut_order,
    group_closure,
    inside_out,
    inside_out_is_automorphism,
    is_vertex_transitive,
    orbits,
    reflection,
    rotation,
)
from .models import (
    AUT_ORACLE_NMAX,
    CORE_ORACLE_NMAX,
    ENDO_ORACLE_NMAX,
    AlgebraReportModel,
    CayleyRequest,
    CayleyResponse,
    CensusModel,
    CheckResult,
    CheckTableRequest,
    CheckTableResponse,
    ClassifyRequest,
    Disagreement,
    HealthResponse,
    Inconclusive,
    PlaneRow,
    RetractRequest,
    RetractResponse,
    ScanRequest,
    ScanResponse,
    TableRequest,
    TableResponse,
    VerifyReport,
    VerifyRequest,
)

SCAN_CSV_VERSION = "gpgraph-plane-csv v1"
SCAN_CSV_COLUMNS = (
    "n,k,bipartite,core,vertex_transitive,group_graph,"
    "two_gen_monoid_graph,loopless_obstruction,aut_order_expected,aut_order_found"
)


def handle_health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


def _valid_pairs(n_max: int):
    for n in range(3, n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            yield GPParams(n, k)


def _plane_row(params: GPParams, with_aut: bool) -> PlaneRow:
    found: Optional[int] = None
    if with_aut:
        found = len(aut_group_bruteforce(build_gp(params)))
    return PlaneRow(
        n=params.n,
        k=params.k,
        bipartite=is_bipartite_gp(params),
        core=classify_core(params).status is CoreStatus.CORE,
        vertex_transitive=is_vertex_transitive(params),
        group_graph=is_group_graph(params),
        two_gen_monoid_graph=is_2gen_monoid_graph(params),
        loopless_obstruction=loopless_semigroup_obstruction(params),
        aut_order_expected=expected_aut_order(params),
        aut_order_found=found,
    )


def handle_classify(req: ClassifyRequest) -> PlaneRow:
    params = GPParams(req.n, req.k)
    return _plane_row(params, with_aut=req.brute_aut or req.n <= 12)


def _dihedral_and_gamma(params: GPParams) -> list[Permutation]:
    gens = [rotation(params), reflection(params)]
    if inside_out_is_automorphism(params):
        gens.append(Permutation(inside_out(params).images))
    return group_closure(gens, 2 * params.n)


def _check_core(n_max: int) -> CheckResult:
    eff = min(n_max, CORE_ORACLE_NMAX)
    result = CheckResult(
        check="core", n_max_requested=n_max, n_max_effective=eff,
        instances=0, agreements=0,
    )
    for params in _valid_pairs(eff):
        if is_bipartite_gp(params):
            continue
        result.instances += 1
        closed = classify_core(params).status is CoreStatus.CORE
        try:
            oracle = is_core_oracle(
                build_gp(params), automorphisms=[rotation(params), reflection(params)]
            )
            spoked = has_spoked_min_odd_cycle(params)
        except BudgetExhaustedError as exc:
            result.inconclusive.append(
                Inconclusive(n=params.n, k=params.k, detail=str(exc))
            )
            continue
        if oracle == closed and spoked == closed:
            result.agreements += 1
        else:
            result.disagreements.append(Disagreement(
                n=params.n, k=params.k,
                closed_form=f"core={closed}",
                oracle=f"avoidability={oracle}, spoked_min_odd_cycle={spoked}",
            ))
    return result


def _check_endo(n_max: int) -> CheckResult:
    eff = min(n_max, ENDO_ORACLE_NMAX)
    result = CheckResult(
        check="endo", n_max_requested=n_max, n_max_effective=eff,
        instances=0, agreements=0,
    )
    for params in _valid_pairs(eff):
        result.instances += 1
        closed = is_endomorphism_transitive(params)
        try:
            oracle = is_endo_transitive_oracle(
                build_gp(params), automorphisms=_dihedral_and_gamma(params)
            )
        except BudgetExhaustedError as exc:
            result.inconclusive.append(
                Inconclusive(n=params.n, k=params.k, detail=str(exc))
            )
            continue
        if oracle == closed:
            result.agreements += 1
        else:
            result.disagreements.append(Disagreement(
                n=params.n, k=params.k,
                closed_form=f"endo_transitive={closed}",
                oracle=f"endo_transitive={oracle}",
            ))
    return result


def _check_aut(n_max: int) -> CheckResult:
    eff = min(n_max, AUT_ORACLE_NMAX)
    result = CheckResult(
        check="aut", n_max_requested=n_max, n_max_effective=eff,
        instances=0, agreements=0,
    )
    for params in _valid_pairs(eff):
        result.instances += 1
        expected = expected_aut_order(params)
        try:
            auts = aut_group_bruteforce(build_gp(params))
        except BudgetExhaustedError as exc:
            result.inconclusive.append(
                Inconclusive(n=params.n, k=params.k, detail=str(exc))
            )
            continue
        found = len(auts)
        transitive = len(orbits(auts, 2 * params.n)) == 1
        order_ok = expected is None or found == expected
        orbit_ok = transitive == is_vertex_transitive(params)
        if order_ok and orbit_ok:
            result.agreements += 1
        else:
            result.disagreements.append(Disagreement(
                n=params.n, k=params.k,
                closed_form=f"expected_order={expected}, "
                            f"transitive={is_vertex_transitive(params)}",
                oracle=f"found_order={found}, one_orbit={transitive}",
            ))
    return result


def handle_verify(req: VerifyRequest) -> VerifyReport:
    checkers = {"core": _check_core, "endo": _check_endo, "aut": _check_aut}
    results = [checkers[name](req.n_max) for name in req.checks]
    ok = all(not r.disagreements and not r.inconclusive for r in results)
    return VerifyReport(results=results, ok=ok)


def _retraction_dot(params: GPParams, images: tuple[int, ...]) -> str:
    graph = build_gp(params)
    lines = [f"graph G_{params.n}_{params.k}_retraction {{"]
    for v in range(graph.num_vertices):
        lines.append(
            f'  {v} [label="{graph.labels[v]} -> {graph.labels[images[v]]}"];'
        )
    for a, b in graph.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def handle_retract(req: RetractRequest) -> RetractResponse:
    params = GPParams(req.n, req.k)
    verdict = classify_core(params)
    if verdict.status is not CoreStatus.NOT_CORE:
        raise GraphError(
            f"G({params.n},{params.k}) is {verdict.status.value}; "
            "only NotCore instances have the inner-cycle retraction"
        )
    vmap = build_retraction(params)
    cp = core_params(params)
    dot = _retraction_dot(params, vmap.images) if req.format == "dot" else None
    return RetractResponse(
        n=params.n, k=params.k, d=cp.d, a=cp.a,
        target=sorted(retraction_target(params)),
        images=list(vmap.images),
        dot=dot,
    )


def _census_model(census: DigraphCensus) -> CensusModel:
    return CensusModel(**census.to_json_obj())


def handle_cayley(req: CayleyRequest) -> CayleyResponse:
    digraph = build_named_construction(req.construction, req.n, req.k)
    _, census = underlying_graph(digraph)
    dot = digraph_to_dot(digraph) if req.format == "dot" else None
    return CayleyResponse(
        construction=req.construction,
        order=digraph.num_vertices,
        connection=list(digraph.connection),
        labels=list(digraph.labels),
        arcs=sorted(digraph.arcs),
        census=_census_model(census),
        dot=dot,
    )


def handle_table(req: TableRequest) -> TableResponse:
    tables = algebra.builtin_tables()
    if req.name not in tables:
        raise algebra.AlgebraError(
            f"unknown table {req.name!r}; expected one of {', '.join(sorted(tables))}"
        )
    return TableResponse(**tables[req.name].to_json_obj())


def handle_check_table(req: CheckTableRequest) -> CheckTableResponse:
    table = algebra.OpTable.from_json_obj(req.table.model_dump())
    connection = req.connection if req.connection is not None else None
    target = GPParams(*req.target) if req.target is not None else None
    report = verify_representation(table, connection, target=target)
    return CheckTableResponse(
        order=report.order,
        connection=list(report.connection),
        algebra=AlgebraReportModel(**report.algebra.to_json_obj()),
        generates=report.generates,
        census=_census_model(report.census),
        target=report.target,
        matches_target=report.matches_target,
        iso_witness=report.iso_witness.as_json_array() if report.iso_witness else None,
    )


def _csv_bool(value: bool) -> str:
    return "true" if value else "false"


def handle_scan(req: ScanRequest) -> ScanResponse:
    lines = [f"# {SCAN_CSV_VERSION}", SCAN_CSV_COLUMNS]
    for params in _valid_pairs(req.n_max):
        row = _plane_row(params, with_aut=params.n <= 12)
        expected = "" if row.aut_order_expected is None else str(row.aut_order_expected)
        found = "" if row.aut_order_found is None else str(row.aut_order_found)
        lines.append(
            f"{row.n},{row.k},{_csv_bool(row.bipartite)},{_csv_bool(row.core)},"
            f"{_csv_bool(row.vertex_transitive)},{_csv_bool(row.group_graph)},"
            f"{_csv_bool(row.two_gen_monoid_graph)},"
            f"{_csv_bool(row.loopless_obstruction)},{expected},{found}"
        )
    return ScanResponse(csv="\n".join(lines) + "\n")
