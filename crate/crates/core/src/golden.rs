//! Hand-transcribed reference tables for `Fl(3)`.

/// Rows `{"w", "poly"}` of the equivariant quantum Schubert polynomials.
pub const TABLE1_JSON: &str = include_str!("../data/table1.json");

/// The nontrivial products `σ_u ∘ σ_v`, `u <= v`, as a structure table.
pub const TABLE2_JSON: &str = include_str!("../data/table2.json");
