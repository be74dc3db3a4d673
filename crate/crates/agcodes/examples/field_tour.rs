//! Exact arithmetic in GF(p^e).
//!
//! Elements are indices in the base-p encoding (the element Σ cᵢ·θⁱ has
//! index Σ cᵢ·pⁱ), so artifacts and θ-power tables mean the same thing
//! across runs and machines.
//!
//! Run with: cargo run --example field_tour

use agcodes::gf::{make_field, Fe};

fn main() -> agcodes::Result<()> {
    // A prime field: plain arithmetic mod p, θ = least primitive root.
    let f19 = make_field(19, 1)?;
    println!(
        "GF(19): θ = {}, 4⁻¹ = {}, 18 + 1 = {}",
        f19.fmt_el(f19.theta()),
        f19.fmt_el(f19.inv(Fe(4))?),
        f19.fmt_el(f19.add(Fe(18), Fe(1))),
    );

    // An extension field: GF(9) with the canonical modulus x² + 2x + 2
    // (constant term first below) and θ = x.
    let f9 = make_field(3, 2)?;
    println!(
        "\nGF(9): modulus {:?}, θ = element index {}",
        f9.modulus(),
        f9.theta().0
    );
    println!("powers of θ:");
    for i in 0..8 {
        let t = f9.theta_pow(i);
        println!("  θ^{i} = index {:>2}  (prints as {})", t.0, f9.fmt_el(t));
    }

    // The multiplicative group is cyclic of order q - 1: every nonzero
    // element is a θ power and has an inverse.
    for a in f9.elements().skip(1) {
        assert_eq!(f9.mul(a, f9.inv(a)?), Fe::ONE);
    }
    println!("all 8 nonzero elements verified invertible");

    // Square roots exist exactly when the θ-exponent is even.
    let two = f9.from_int(2); // = θ⁴, so -1 is a square in GF(9)
    let root = f9.sqrt(two).expect("2 = θ⁴ is a square");
    assert_eq!(f9.mul(root, root), two);
    println!(
        "√2 = {} in GF(9); element orders: ord(θ) = {}, ord(2) = {}",
        f9.fmt_el(root),
        f9.order(f9.theta())?,
        f9.order(two)?,
    );

    // Fields can also be built from an explicit modulus — useful when an
    // artifact pins one — but the modulus must be irreducible with x
    // primitive, and the constructor re-verifies both.
    let again = agcodes::gf::Field::with_modulus(3, 2, &[2, 2, 1])?;
    assert!(again.same_as(&f9));
    let rejected = agcodes::gf::Field::with_modulus(7, 2, &[1, 0, 1]);
    println!(
        "\nx² + 1 over GF(7) rejected (x has order 4, not primitive): {}",
        rejected.is_err()
    );
    Ok(())
}
