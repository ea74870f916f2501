//! JSON encodings (under construction).
