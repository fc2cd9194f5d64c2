"""CLI for rigid G2 local systems."""

import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from g2_rigid import config
from g2_rigid.chargroup import Character
from g2_rigid.convolution import katz_reduce, mc as middle_convolution, mt as middle_tensor
from g2_rigid.errors import G2RigidError, InternalConsistencyError, InvalidDataError, NotInG2Error
from g2_rigid.g2 import (
    classify_rigid_g2,
    construct_h,
    enumerate_rational_pairs,
    infinity_case,
    recognize as recognize_class,
)
from g2_rigid.localdata import (
    FormalLocalSystem,
    LocalMonodromy,
    RankOneSystem,
    euler_characteristic,
    rank,
    rigidity_index,
    validate,
)
from g2_rigid.log import setup_logging
from g2_rigid.motivic import hyp_equation, specialize_and_render
from g2_rigid.pointcount import count_fiber, sweep as sweep_fibers
from g2_rigid.reprring import g2_centralizer_dim

app = typer.Typer(
    name="g2rigid",
    help="Rigid G2 local systems: middle convolution, construction, classification",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

POINT_COLUMNS = ("alpha1", "alpha2", "infinity")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Rigid G2 local systems."""
    setup_logging("DEBUG" if verbose else config.LOG_LEVEL, err_console)


@contextmanager
def _errors():
    """Report package errors and exit with their code (2 invalid input, 3 precondition)."""
    try:
        yield
    except G2RigidError as e:
        err_console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(e.exit_code)


def _read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise InvalidDataError(f"cannot read {path}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidDataError(f"{path} is not valid JSON: {e}") from e


def _load_system(path: str) -> FormalLocalSystem:
    return FormalLocalSystem.from_dict(_read_json(path))


def _echo_json(data) -> None:
    typer.echo(json.dumps(data, indent=2))


def _parse_twists(items: list[str]) -> RankOneSystem:
    chars = []
    for item in items:
        label, sep, value = item.partition("=")
        if not sep or not label.strip():
            raise InvalidDataError(f"twist {item!r} must look like label=p/q")
        chars.append((label.strip(), Character.parse(value)))
    return RankOneSystem(tuple(chars))


def _system_table(title: str, systems: list[FormalLocalSystem]) -> Table:
    table = Table(title=title)
    table.add_column("", style="bold")
    for column in POINT_COLUMNS:
        table.add_column(column)
    for i, system in enumerate(systems):
        table.add_row(f"H{i}" if len(systems) > 1 else "", *(str(m) for _, m in system.points()))
    return table


@app.command()
def construct(
    phi: str = typer.Option(..., "--phi", help="Character phi as p/q"),
    eta: str = typer.Option(..., "--eta", help="Character eta as p/q"),
    show_table: bool = typer.Option(True, "--table/--no-table", help="Show H0..H6 as a table"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
    verify: bool = typer.Option(False, "--verify", help="Check G2 classes, rigidity and irreducibility of H6"),
):
    """Build H0..H6 for (phi, eta)."""
    with _errors():
        phi_c, eta_c = Character.parse(phi), Character.parse(eta)
        systems = construct_h(phi_c, eta_c)
        case = infinity_case(phi_c, eta_c)
        checks = _verify_h6(systems[-1]) if verify else None

    if as_json:
        data = {
            "phi": str(phi_c),
            "eta": str(eta_c),
            "case": case.model_dump(mode="json"),
            "systems": [s.to_dict() for s in systems],
        }
        if checks is not None:
            data["checks"] = checks
        _echo_json(data)
        return

    if show_table:
        console.print(_system_table(f"H({phi_c}, {eta_c}), case {case.case}: {case.label}", systems))
    if checks is not None:
        for point, info in checks["classes"].items():
            console.print(f"[green]{point}[/green]: {info['label']} dim C_G2 = {info['dim_c_g2']}")
        console.print(
            f"rigidity index {checks['rigidity_index']}, Euler characteristic {checks['euler_characteristic']}"
        )


def _verify_h6(h6: FormalLocalSystem) -> dict:
    classes = {}
    for point, m in h6.points():
        info = recognize_class(m)
        if info is None:
            raise NotInG2Error(f"H6 at {point} is not a G2 class: {m}")
        if g2_centralizer_dim(m) != info.dim_c_g2:
            raise InternalConsistencyError(f"G2 centralizer dimension mismatch at {point}")
        classes[point] = info.model_dump(mode="json")
    violations = validate(h6)
    if violations:
        raise InvalidDataError("H6 is not a valid local system", violations)
    rig, euler = rigidity_index(h6), euler_characteristic(h6)
    if rig != 2 or euler > 0:
        raise InternalConsistencyError(f"H6 has rigidity index {rig} and Euler characteristic {euler}")
    return {"classes": classes, "rigidity_index": rig, "euler_characteristic": euler}


@app.command()
def mc(
    input_path: str = typer.Option("-", "--input", "-i", help="Local system JSON file, '-' for stdin"),
    chi: str = typer.Option(..., "--chi", help="Convolution character p/q"),
):
    """Middle convolution of a local system."""
    with _errors():
        result = middle_convolution(_load_system(input_path), Character.parse(chi))
    _echo_json(result.to_dict())


@app.command()
def mt(
    input_path: str = typer.Option("-", "--input", "-i", help="Local system JSON file, '-' for stdin"),
    twist: list[str] = typer.Option(..., "--twist", "-t", help="label=p/q, repeatable"),
):
    """Middle tensor with a rank-one system."""
    with _errors():
        result = middle_tensor(_load_system(input_path), _parse_twists(twist))
    _echo_json(result.to_dict())


@app.command()
def reduce(
    input_path: str = typer.Option("-", "--input", "-i", help="Local system JSON file, '-' for stdin"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Greedy Katz reduction towards rank one."""
    with _errors():
        trace = katz_reduce(_load_system(input_path))
    if as_json:
        _echo_json(trace.model_dump(mode="json"))
        return
    table = Table(title=f"Reduction: {trace.outcome}")
    table.add_column("Step", justify="right")
    table.add_column("Twist")
    table.add_column("chi")
    table.add_column("Rank", justify="right")
    for i, step in enumerate(trace.steps, start=1):
        twist_text = ", ".join(f"{label}={c}" for label, c in step.twist.items())
        table.add_row(str(i), twist_text, step.chi, str(step.rank_after))
    console.print(table)
    if trace.message:
        console.print(f"[yellow]{trace.message}[/yellow]")


@app.command()
def rigidity(
    input_path: str = typer.Option("-", "--input", "-i", help="Local system JSON file, '-' for stdin"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Rank, rigidity index and Euler characteristic."""
    with _errors():
        system = _load_system(input_path)
        data = {
            "rank": rank(system),
            "rigidity_index": rigidity_index(system),
            "euler_characteristic": euler_characteristic(system),
        }
    if as_json:
        _echo_json(data)
        return
    for key, value in data.items():
        console.print(f"{key.replace('_', ' ')}: [bold]{value}[/bold]")


@app.command()
def recognize(
    input_path: str = typer.Option("-", "--input", "-i", help="Local monodromy JSON ({'parts': ...}), '-' for stdin"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Identify a degree-7 local monodromy in the table of G2 classes."""
    with _errors():
        m = LocalMonodromy.from_dict(_read_json(input_path))
        info = recognize_class(m)
        if info is None:
            raise NotInG2Error(f"{m} is not the Jordan form of an element of G2")
    if as_json:
        _echo_json(info.model_dump(mode="json"))
        return
    params = ", ".join(f"{k}={v}" for k, v in info.parameters.items())
    console.print(f"row {info.template_id}: [bold]{info.label}[/bold] {params}")
    console.print(f"dim C_G2 = {info.dim_c_g2}, dim C_GL7 = {info.dim_c_gl7}")


@app.command()
def classify(
    bound: int = typer.Option(config.DEFAULT_CLASSIFY_BOUND, "--bound", "-b", help="Character order bound B"),
    points: int = typer.Option(2, "--points", "-p", help="Number of finite points"),
    workers: int = typer.Option(1, "--workers", "-w", help="Worker threads (one profile each)"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Centralizer profiles and the fate of every class tuple."""
    with _errors():
        report = classify_rigid_g2(bound, finite_points=points, workers=workers)
    if as_json:
        _echo_json(report.model_dump(mode="json"))
        return

    table = Table(title=f"Profiles (bound {bound}, {points} finite points)")
    table.add_column("Profile")
    table.add_column("Tuples", justify="right")
    table.add_column("Statuses")
    for profile in report.profiles:
        verdicts = report.for_profile(profile)
        counts: dict[str, int] = {}
        for v in verdicts:
            counts[v.status] = counts.get(v.status, 0) + 1
        table.add_row(str(tuple(profile)), str(len(verdicts)), ", ".join(f"{k}: {n}" for k, n in sorted(counts.items())))
    console.print(table)

    survivors = report.survivors()
    console.print(f"\n[bold]{len(survivors)} surviving tuples[/bold]")
    for v in survivors:
        console.print(f"  {' | '.join(v.classes)}")


@app.command()
def rational(
    max_order: int = typer.Option(config.DEFAULT_RATIONAL_MAX_ORDER, "--max-order", help="Largest character order"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Infinity classes with rational trace."""
    with _errors():
        classes = enumerate_rational_pairs(max_order)
    if as_json:
        _echo_json([c.model_dump(mode="json") for c in classes])
        return
    table = Table(title=f"Rational traces at infinity (orders <= {max_order})")
    table.add_column("phi")
    table.add_column("eta")
    table.add_column("Case", justify="right")
    table.add_column("Row")
    table.add_column("Constructible")
    table.add_column("Infinity")
    for c in classes:
        table.add_row(
            c.phi, c.eta, str(c.case), c.row or "-",
            "[green]yes[/green]" if c.constructible else "[red]no[/red]",
            str(LocalMonodromy.from_dict(c.infinity)),
        )
    console.print(table)


@app.command()
def hyp(
    n: int = typer.Option(..., "--N", help="Even exponent N"),
    n1: int = typer.Option(0, "--n1"),
    n2: int = typer.Option(0, "--n2"),
    specialize: Optional[str] = typer.Option(None, "--specialize", "-s", help="t1,t2 values for T1, T2"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Exponent tables of Hyp(n1, n2), optionally specialized."""
    with _errors():
        h = hyp_equation(n, n1, n2)
        equation = None
        if specialize is not None:
            try:
                t1, t2 = (int(v) for v in specialize.split(","))
            except ValueError:
                raise InvalidDataError(f"--specialize expects 't1,t2', got {specialize!r}") from None
            h = h.model_copy(update={"specialization": (t1, t2)})
            equation = specialize_and_render(h, t1, t2)

    if as_json:
        data = h.model_dump(mode="json")
        if equation is not None:
            data["equation"] = equation.model_dump(mode="json")
        _echo_json(data)
        return
    if equation is not None:
        typer.echo(equation.text)
        for constraint in equation.constraints:
            console.print(f"[dim]{constraint}[/dim]")
        return
    table = Table(title=f"Hyp({h.n1}, {h.n2}), N = {h.N}")
    table.add_column("a", justify="right")
    table.add_column("e(a,1)", justify="right")
    table.add_column("e(a,2)", justify="right")
    table.add_column("f(a)", justify="right")
    for a, (e1, e2) in enumerate(h.e, start=1):
        table.add_row(str(a), str(e1), str(e2), str(h.f[a - 1]) if a <= len(h.f) else "")
    console.print(table)


def _report_table(reports) -> Table:
    table = Table(title="Fiber counts")
    for column in ("q", "t", "domain", "S", "#Hyp", "direct", "ok", "time"):
        table.add_column(column, justify="right")
    for r in reports:
        table.add_row(
            str(r.q), str(r.t), str(r.domain_size), str(r.s_value), str(r.hyp_count),
            "-" if r.direct_count is None else str(r.direct_count),
            "[green]yes[/green]" if r.agrees else "[red]no[/red]",
            f"{r.wall_time:.2f}s",
        )
    return table


@app.command()
def count(
    q: int = typer.Option(..., "--q", help="Odd prime"),
    t: int = typer.Option(..., "--t", help="Fiber value in F_q minus {0, 1}"),
    method: str = typer.Option("both", "--method", "-m", help="char-sum, direct or both"),
    threads: int = typer.Option(config.DEFAULT_THREADS, "--threads", help="Worker threads"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Count points on one fiber of the double cover."""
    with _errors():
        report = count_fiber(q, t, method=method, threads=threads)
    if as_json:
        _echo_json(report.model_dump(mode="json"))
        return
    console.print(_report_table([report]))


@app.command()
def sweep(
    q: list[int] = typer.Option(..., "--q", help="Odd prime, repeatable"),
    threads: int = typer.Option(config.DEFAULT_THREADS, "--threads", help="Worker threads"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Count points on every fiber for each q."""
    with _errors():
        reports = sweep_fibers(q, threads=threads)
    if as_json:
        _echo_json([r.model_dump(mode="json") for r in reports])
        return
    console.print(_report_table(reports))


if __name__ == "__main__":
    app()
