//! Stochastic simulation (under construction).
