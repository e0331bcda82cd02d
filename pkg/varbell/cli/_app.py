#!/usr/bin/env python
# -*- coding: utf-8 -*-
import logging
from pathlib import Path
from typing import Optional
import typer
from varbell.config import RunConfig
from varbell.errors import (
    CapacityError, ConvergenceError, DomainError, InvariantError, ShapeError
)
from ._run import run


app = typer.Typer(
    help='Verify the separability, maximal quantum and local hidden '
         'variable bounds of the variant MK operator.',
    add_completion=False,
)

N_OPTION = typer.Option(..., '--n', help='Number of qubits (sites).')
SEED_OPTION = typer.Option(42, '--seed', help='Master seed.')
RESTARTS_OPTION = typer.Option(
    64, '--restarts', help='Random starts of the product optimizer.'
)
TOL_OPTION = typer.Option(1e-9, '--tol', help='Convergence threshold.')
THETA_POINTS_OPTION = typer.Option(
    33, '--theta-points', help='Points of the GHZ angle grid.'
)
FORMAT_OPTION = typer.Option('json', '--format', help='json or csv.')
OUTPUT_OPTION = typer.Option(
    None, '--output', help='Report file; stdout if omitted.'
)
WORKERS_OPTION = typer.Option(
    1, '--workers', help='Processes for hidden variable enumeration.'
)
PROGRESS_OPTION = typer.Option(
    False, '--progress/--no-progress', help='Show progress bars on stderr.'
)
VERBOSE_OPTION = typer.Option(
    False, '--verbose', '-v', help='Log pipeline milestones to stderr.'
)

EXIT_FAIL = 1
EXIT_CONFIG = 2


def _enable_logging():
    logger = logging.getLogger('varbell')
    if not any(getattr(h, '_varbell', False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter('%(asctime)s %(name)s %(levelname)s %(message)s')
        )
        handler._varbell = True
        logger.addHandler(handler)
    logger.setLevel(logging.INFO)


def _execute(command, n, seed, restarts, tol, theta_points, output_format,
             output, workers, progress, verbose):
    if verbose:
        _enable_logging()
    try:
        config = RunConfig(
            n, command=command, seed=seed, restarts=restarts, tol=tol,
            theta_points=theta_points, output_format=output_format,
            output_path=output, workers=workers,
            progressbar='default' if progress else None
        )
        status, body = run(config)
        if config.output_path is None:
            typer.echo(body.decode('utf-8'), nl=False)
        else:
            config.output_path.write_bytes(body)
    except (CapacityError, DomainError, InvariantError, ShapeError) as e:
        typer.echo(f'error: {e}', err=True)
        raise typer.Exit(EXIT_CONFIG)
    except OSError as e:
        typer.echo(f'error: cannot write report: {e}', err=True)
        raise typer.Exit(EXIT_CONFIG)
    except ConvergenceError as e:
        typer.echo(f'error: {e}', err=True)
        raise typer.Exit(EXIT_FAIL)
    if status:
        typer.echo('verification failed', err=True)
    raise typer.Exit(status)


@app.command('bounds')
def bounds_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Analytic bounds checked by optimizer, power iteration and
    enumeration.'''
    _execute('bounds', n, seed, restarts, tol, theta_points, output_format,
             output, workers, progress, verbose)


@app.command('ghz-curve')
def ghz_curve_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Violation curve of the generalized GHZ family.'''
    _execute('ghz-curve', n, seed, restarts, tol, theta_points,
             output_format, output, workers, progress, verbose)


@app.command('lhv-enum')
def lhv_enum_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Exhaustive enumeration of deterministic hidden variables.'''
    _execute('lhv-enum', n, seed, restarts, tol, theta_points,
             output_format, output, workers, progress, verbose)


@app.command('optimize')
def optimize_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Multi-start maximization over product states.'''
    _execute('optimize', n, seed, restarts, tol, theta_points,
             output_format, output, workers, progress, verbose)


@app.command('verify-spectral')
def verify_spectral_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Compare the recursive MK operator with its rank-2 form.'''
    _execute('verify-spectral', n, seed, restarts, tol, theta_points,
             output_format, output, workers, progress, verbose)


@app.command('all')
def all_cmd(
    n: int = N_OPTION,
    seed: int = SEED_OPTION,
    restarts: int = RESTARTS_OPTION,
    tol: float = TOL_OPTION,
    theta_points: int = THETA_POINTS_OPTION,
    output_format: str = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    workers: int = WORKERS_OPTION,
    progress: bool = PROGRESS_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    '''Every verification, including the GHZ curve.'''
    _execute('all', n, seed, restarts, tol, theta_points, output_format,
             output, workers, progress, verbose)


def main():
    app()
