#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pathlib import Path
from varbell.errors import CapacityError, DomainError, InvariantError


COMMANDS = (
    'bounds', 'ghz-curve', 'lhv-enum', 'optimize', 'verify-spectral', 'all'
)
FORMATS = ('json', 'csv')

# admissible qubit or site counts per command
N_RANGE = {
    'bounds': (2, 10),
    'ghz-curve': (2, 50),
    'lhv-enum': (1, 12),
    'optimize': (2, 50),
    'verify-spectral': (2, 10),
    'all': (2, 10),
}

TOLERANCES = {
    'construction': 1e-12,
    'spectral': 1e-10,
    'curve': 1e-10,
    'attainment': 1e-9,
    'eigen': 1e-8,
    'optimizer_reach': 1e-6,
    'lhv_identity': 1e-12,
}


class RunConfig:
    '''Settings of one verification run.

    Parameters
    ----------
    n: int
        Number of qubits (or hidden variable sites for ``lhv-enum``).
    command: str
        One of ``bounds``, ``ghz-curve``, ``lhv-enum``, ``optimize``,
        ``verify-spectral`` and ``all``.
    seed: int
        Master seed of every random stream of the run.
    restarts: int
        Number of random starts of the product optimizer.
    tol: float
        Convergence threshold of the optimizer and the power iteration.
    theta_points: int
        Size of the uniform angle grid of the GHZ curve.
    output_format: 'json' or 'csv'
        CSV is only available for ``ghz-curve``.
    output_path: str or Path
        Destination of the report; ``None`` writes to stdout.
    workers: int
        Worker processes for hidden variable enumeration.
    progressbar: 'default', None or callable
        Progress display for long loops.
    '''

    def __init__(self, n, command='all', seed=42, restarts=64, tol=1e-9,
                 theta_points=33, output_format='json', output_path=None,
                 workers=1, progressbar=None):
        if command not in COMMANDS:
            raise InvariantError(
                f'Unknown command {command!r}, expecting one of {COMMANDS}.'
            )
        low, high = N_RANGE[command]
        if n < low:
            raise DomainError(f'{command} needs n >= {low}, got {n}.')
        if n > high:
            raise CapacityError(f'{command} is capped at n = {high}, got {n}.')
        if restarts < 1:
            raise InvariantError(f'restarts must be positive, got {restarts}.')
        if not tol > 0:
            raise InvariantError(f'tol must be positive, got {tol}.')
        if theta_points < 0:
            raise InvariantError(
                f'theta_points must be non-negative, got {theta_points}.'
            )
        if output_format not in FORMATS:
            raise InvariantError(
                f'Unknown output format {output_format!r}, expecting one of '
                f'{FORMATS}.'
            )
        if output_format == 'csv' and command != 'ghz-curve':
            raise InvariantError(
                'CSV output is only available for the ghz-curve command.'
            )
        if workers < 1:
            raise InvariantError(f'workers must be positive, got {workers}.')

        self.n = int(n)
        self.command = command
        self.seed = int(seed)
        self.restarts = int(restarts)
        self.tol = float(tol)
        self.theta_points = int(theta_points)
        self.output_format = output_format
        self.output_path = None if output_path is None else Path(output_path)
        self.workers = int(workers)
        self._progressbar = progressbar

    @property
    def progressbar(self):
        return self._progressbar

    @property
    def config(self):
        return {
            key: self.__dict__[key] for key in self.__dict__
            if not key.startswith('_')
        }

    @property
    def tolerances(self):
        return dict(TOLERANCES, optimizer=self.tol)

    def __repr__(self):
        fields = ', '.join(f'{k}={v!r}' for k, v in self.config.items())
        return f'{type(self).__qualname__}({fields})'
