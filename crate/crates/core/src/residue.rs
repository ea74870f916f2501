//! Toric residues (under construction).
