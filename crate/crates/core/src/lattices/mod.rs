//! Lattice arithmetic for the ball-quotient side: root lattices and their
//! roots, discriminant groups, complements, Eisenstein structures, Heegner
//! divisors, Borcherds orders and cusps.

pub mod enumerate;
pub mod heegner;
pub mod isometry;
pub mod lattice;
pub mod roots;

pub use heegner::{borcherds_orders, cusp_invariants, heegner_types, BorcherdsOrders, CuspRecord, HeegnerType};
pub use isometry::{fpf_order3, Fpf3, Isometry, Nonexistence};
pub use lattice::{discriminant_group, make_lattice, orthogonal_complement, Lattice, SignConvention};
pub use roots::{root_system, roots, Component, Family, RootSystem};
