"""Density-matrix reference model, built from the operators alone.

Nothing here imports the package: the master equation is assembled from
Pauli matrices and dissipators, and the heat traces are evaluated directly.
"""
import numpy as np
from scipy.linalg import null_space

HBAR = 6.62607015e-34 / (2 * np.pi)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)  # basis (|e>, |g>)
SM = np.array([[0, 0], [1, 0]], dtype=complex)  # |g><e|
SP = SM.conj().T
I2 = np.eye(2)


def dissipator(op, rho):
    return op @ rho @ op.conj().T - 0.5 * (op.conj().T @ op @ rho + rho @ op.conj().T @ op)


def bath_term(rho, gamma, n):
    return gamma * (n + 1) * dissipator(SM, rho) + gamma * n * dissipator(SP, rho)


def rhs(rho, H, baths, gamma_phi=0.0):
    """H in units of hbar (rad/s)."""
    out = -1j * (H @ rho - rho @ H)
    for gamma, n in baths:
        out = out + bath_term(rho, gamma, n)
    if gamma_phi:
        out = out + 0.5 * gamma_phi * dissipator(SZ, rho)
    return out


def superoperator(H, baths, gamma_phi=0.0):
    cols = []
    for k in range(4):
        e = np.zeros(4, dtype=complex)
        e[k] = 1
        cols.append(rhs(e.reshape(2, 2), H, baths, gamma_phi).reshape(4))
    return np.array(cols).T


def rotating_hamiltonian(g, delta):
    return 0.5 * delta * SZ + 0.5 * g * SX


def steady_rho(gh, nh, gc, nc, g, delta, gamma_phi=0.0):
    L = superoperator(rotating_hamiltonian(g, delta), [(gh, nh), (gc, nc)], gamma_phi)
    v = null_space(L)[:, 0].reshape(2, 2)
    return v / np.trace(v)


def bloch(rho):
    return tuple(float(np.real(np.trace(s @ rho))) for s in (SX, SY, SZ))


def heat_traces(rho_rot, gh, nh, gc, nc, g, delta, omega0, gamma_phi=0.0):
    """Energy flows at t = 0, where lab and rotating frames coincide.

    Returns (J_cl, J_q, J_c, J_phi, P) in W.
    """
    H0 = 0.5 * omega0 * SZ
    Hd = 0.5 * g * SX  # H_d(0)
    Hd_dot = 0.5 * g * (omega0 - delta) * SY  # d/dt of H_d(t) at t = 0
    Lh = bath_term(rho_rot, gh, nh)
    Lc = bath_term(rho_rot, gc, nc)
    Lphi = 0.5 * gamma_phi * dissipator(SZ, rho_rot)
    tr = lambda a, b: HBAR * float(np.real(np.trace(a @ b)))
    return (
        tr(H0, Lh),
        tr(Hd, Lh),
        tr(H0 + Hd, Lc),
        tr(Hd, Lphi),
        tr(Hd_dot, rho_rot),
    )


def planck(omega, T):
    return 1.0 / np.expm1(HBAR * omega / (1.380649e-23 * T))
