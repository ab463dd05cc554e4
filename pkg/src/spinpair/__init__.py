"""Thermal entanglement of a two-qubit Heisenberg XXX chain with x-axis
Dzyaloshinskii-Moriya and KSEA couplings."""

from .axes import AxisSpec
from .concurrence import (
    ConcurrenceResult,
    concurrence,
    concurrence_analytic,
    concurrence_of_density_matrix,
    concurrence_oracle,
    ground_state_concurrence,
)
from .model import ModelParams, analytic_spectrum, build_hamiltonian, classify_ground_state
from .sweep import critical_temperature, sweep_1d, sweep_2d
from .thermal import Temperature, partition_function, thermal_state_analytic, thermal_state_oracle

__version__ = "0.1.0"
