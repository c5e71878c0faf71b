"""External SAT solver harness.

Spawns any solver that follows the standard output convention ("s
SATISFIABLE" / "s UNSATISFIABLE" status line, "v " model lines) and
optionally pipes unsatisfiability proofs through an external checker.
The solver binary is configured by a command template; nothing here
implements solving itself.
"""

from __future__ import annotations

import shlex
import shutil
import subprocess
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import encoder
from .witness import decode_model


class SolverError(Exception):
    pass


class SolverNotFound(SolverError):
    pass


class SolverOutputError(SolverError):
    pass


#: probed in order when no command template is configured
SOLVER_CANDIDATES = (
    "cadical",
    "dimacs-cadical",
    "kissat",
    "cryptominisat5",
    "glucose",
    "varisat",
    "minisat",
)


def discover_solver() -> Optional[str]:
    """Command template for the first standard solver found on PATH."""
    for name in SOLVER_CANDIDATES:
        if shutil.which(name):
            return f"{name} {{cnf}}"
    return None


@dataclass
class SolverConfig:
    """How to run the solver (and, optionally, the proof checker).

    command is a template with {cnf} and, when proofs are produced,
    {proof} placeholders; if check_proofs is set and the template has no
    {proof}, the proof path is appended as a final argument.
    """

    command: str
    timeout: float = 600.0
    check_proofs: bool = False
    checker_command: Optional[str] = None

    def __post_init__(self):
        if not self.command or not self.command.strip():
            raise ValueError("solver command template must be nonempty")
        if self.timeout <= 0:
            raise ValueError("solver timeout must be positive")
        if self.check_proofs and not self.checker_command:
            raise ValueError("check_proofs requires a checker command")


@dataclass
class SolveResult:
    verdict: str  # "SAT" | "UNSAT" | "UNKNOWN"
    model: Optional[list[int]] = None
    proof_check: str = "skipped"  # "passed" | "skipped" | "failed"
    wall_time: float = 0.0
    reason: str = ""
    orientation_table: Optional[dict] = None


def default_config(
    command: Optional[str] = None,
    timeout: float = 600.0,
    check_proofs: bool = False,
    checker_command: Optional[str] = None,
) -> SolverConfig:
    cmd = command or discover_solver()
    if cmd is None:
        raise SolverNotFound(
            "no SAT solver found on PATH; set one with --solver-cmd "
            f"(probed: {', '.join(SOLVER_CANDIDATES)})"
        )
    return SolverConfig(cmd, timeout, check_proofs, checker_command)


def parse_config_file(path) -> SolverConfig:
    """Plain key=value config: solver_command, timeout, check_proofs, checker_command."""
    values: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad config line (expected key=value): {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return SolverConfig(
        command=values.get("solver_command", discover_solver() or ""),
        timeout=float(values.get("timeout", "600")),
        check_proofs=values.get("check_proofs", "false").lower()
        in ("1", "true", "yes", "on"),
        checker_command=values.get("checker_command") or None,
    )


def _parse_output(text: str) -> tuple[Optional[str], Optional[list[int]]]:
    verdict = None
    model: Optional[list[int]] = None
    for line in text.splitlines():
        if line.startswith("s "):
            status = line[2:].strip()
            if status == "SATISFIABLE":
                verdict = "SAT"
            elif status == "UNSATISFIABLE":
                verdict = "UNSAT"
            else:
                verdict = "UNKNOWN"
        elif line.startswith("v "):
            if model is None:
                model = []
            model.extend(int(tok) for tok in line[2:].split())
    if model is not None:
        model = [lit for lit in model if lit != 0]
    return verdict, model


def solve(cnf_path, config: SolverConfig) -> SolveResult:
    """Run the configured solver on a DIMACS file and parse its verdict."""
    cnf_path = Path(cnf_path)
    if not cnf_path.exists():
        raise FileNotFoundError(f"no such CNF file: {cnf_path}")
    proof_path = cnf_path.with_suffix(cnf_path.suffix + ".proof")
    command = config.command
    if config.check_proofs and "{proof}" not in command:
        command += " {proof}"
    argv = [
        part.format(cnf=str(cnf_path), proof=str(proof_path))
        for part in shlex.split(command)
    ]
    start = time.monotonic()
    try:
        proc = subprocess.run(
            argv, capture_output=True, text=True, timeout=config.timeout
        )
    except FileNotFoundError as exc:
        raise SolverNotFound(f"solver binary not found: {argv[0]}") from exc
    except subprocess.TimeoutExpired:
        return SolveResult(
            "UNKNOWN",
            wall_time=time.monotonic() - start,
            reason=f"timeout after {config.timeout}s",
        )
    wall = time.monotonic() - start

    verdict, model = _parse_output(proc.stdout)
    if verdict is None:
        raise SolverOutputError(
            f"no status line in solver output (exit {proc.returncode}): "
            f"{proc.stdout[-200:]!r}"
        )
    if verdict == "SAT" and model is None:
        raise SolverOutputError("solver reported SAT but printed no model")
    if verdict != "SAT":
        model = None

    proof_check = "skipped"
    if verdict == "UNSAT" and config.check_proofs:
        proof_check = _check_proof(cnf_path, proof_path, config)
    return SolveResult(verdict, model, proof_check, wall)


def _check_proof(cnf_path: Path, proof_path: Path, config: SolverConfig) -> str:
    if not proof_path.exists():
        return "failed"
    argv = [
        part.format(cnf=str(cnf_path), proof=str(proof_path))
        for part in shlex.split(config.checker_command)
    ]
    try:
        proc = subprocess.run(
            argv, capture_output=True, text=True, timeout=config.timeout
        )
    except FileNotFoundError as exc:
        raise SolverNotFound(f"proof checker not found: {argv[0]}") from exc
    except subprocess.TimeoutExpired:
        return "failed"
    if proc.returncode == 0:
        proof_path.unlink()  # stream-and-discard: keep no bulky proof files
        return "passed"
    return "failed"


def run_case(
    mode: str,
    n: int,
    config: SolverConfig,
    k: Optional[int] = None,
    workdir=None,
    log_path=None,
) -> SolveResult:
    """Encode one case, solve it, decode the model, append to the results log."""
    if mode == "hole6":
        cnf, vm = encoder.encode_hole6(n)
        label = "hole6"
    elif mode == "gon6":
        cnf, vm = encoder.encode_gon6(n)
        label = "gon6"
    elif mode == "naive-hole":
        if k is None:
            raise ValueError("naive-hole mode needs k")
        cnf, vm = encoder.encode_naive_hole(k, n)
        label = f"naive-hole({k})"
    else:
        raise ValueError(f"unknown mode {mode!r}")

    own_dir = None
    if workdir is None:
        own_dir = tempfile.TemporaryDirectory(prefix="hexsat-")
        workdir = own_dir.name
    try:
        cnf_path = Path(workdir) / f"{label.replace('(', '-').rstrip(')')}_{n}.cnf"
        encoder.write_dimacs(cnf, vm, cnf_path, mode=label, n=n)
        result = solve(cnf_path, config)
        if result.verdict == "SAT" and result.model is not None:
            result.orientation_table = decode_model(result.model, vm)
        if log_path is not None:
            line = f"{label} {n} {result.verdict} {result.wall_time:.2f} {result.proof_check}\n"
            with open(log_path, "a", encoding="utf-8") as fh:
                fh.write(line)
        return result
    finally:
        if own_dir is not None:
            own_dir.cleanup()
