//! Root systems, cusps and Heegner divisors of the ball-quotient lattice.

use canon4::lattices::{borcherds_orders, cusp_invariants, discriminant_group, fpf_order3, heegner_types, make_lattice, root_system, Fpf3};

fn main() -> canon4::Result<()> {
    let l = make_lattice("E6+A2")?;
    println!("E6+A2: roots {}, discriminant {:?}", root_system(&l)?.label(), discriminant_group(&l)?);
    for c in cusp_invariants()? {
        println!("cusp {}", c.label);
    }
    for h in heegner_types()? {
        println!("Heegner complement {}", h.root_system.label());
    }
    for r in borcherds_orders()?.rows {
        println!("{} vanishes to order {}", r.divisor, r.vanishing_order);
    }
    for name in ["E8", "A4"] {
        let found = matches!(fpf_order3(&make_lattice(name)?)?, Fpf3::Found(_));
        println!("{name} has a fixed-point-free isometry of order 3: {found}");
    }
    Ok(())
}
