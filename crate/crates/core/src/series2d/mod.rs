//! Bivariate series engine (under construction).
