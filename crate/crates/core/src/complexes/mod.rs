//! Based chain complexes, chain maps, towers, filtrations and torsion.

mod chain_map;
mod complex;
mod filtration;
mod torsion;
mod torus;
mod tower;

pub use chain_map::{rationalize_map, ChainMap};
pub use complex::{numbered_labels, BaseChange, BasedChainComplex, Coefficient, ComplexRing, IntComplex, RatComplex, SeriesComplex};
pub use filtration::{FiltrationReport, LevelFiltration};
pub use torsion::{contraction, det_one_minus_th, one_minus_th, torsion, torsion_of_map, torsion_raw, torsion_with, Torsion, TorsionStrategy};
pub use torus::{algebraic_mapping_torus, alternating_det_product, mapping_torus_zero_boundary};
pub use tower::Tower;
