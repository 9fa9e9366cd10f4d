"""
wso-rk: weak-stage-order explicit Runge-Kutta toolkit

Exact verification and construction of explicit Runge-Kutta methods with high
weak stage order, plus the 1D convergence studies that exercise them.
"""

__version__ = "1.0.0"
__description__ = "Weak stage order explicit Runge-Kutta methods: verification, construction, experiments"
