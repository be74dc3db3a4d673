//! Graded function bases with prescribed pole orders at infinity.
//!
//! The code constructions evaluate the monomial basis of L(m·P∞): the
//! functions with no poles away from infinity and pole order ≤ m there.
//! Which orders occur is governed by the Weierstrass semigroup — every
//! order on the line, everything but 1 on an elliptic curve, and the
//! numerical semigroup ⟨q0, q0+1⟩ on the Hermitian curve.
//!
//! Run with: cargo run --example rr_bases

use agcodes::curves::Curve;
use agcodes::gf::make_field;

fn show(label: &str, curve: &Curve, m: usize) {
    let basis = curve.rr_basis(m);
    let rendered: Vec<String> = basis
        .monomials
        .iter()
        .map(|mono| {
            let power = |v: &str, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let name = match (power("x", mono.x_exp), power("y", mono.y_exp)) {
                (x, y) if x.is_empty() && y.is_empty() => "1".to_string(),
                (x, y) if x.is_empty() => y,
                (x, y) if y.is_empty() => x,
                (x, y) => format!("{x}·{y}"),
            };
            format!("{name} (ord {})", mono.pole_order)
        })
        .collect();
    println!(
        "{label}, m = {m}: dim {} — {}",
        basis.dimension(),
        rendered.join(", ")
    );
}

fn main() -> agcodes::Result<()> {
    let f19 = make_field(19, 1)?;
    let line = Curve::line(f19);
    show("line", &line, 4);

    // Genus 1: order 1 is a gap, so dim L(m) = m for m ≥ 1.
    let f9 = make_field(3, 2)?;
    let elliptic = Curve::elliptic(f9.clone(), f9.from_int(1), f9.from_int(0))?;
    show("elliptic", &elliptic, 5);
    assert!(!elliptic.is_pole_number(1));
    assert_eq!(elliptic.rr_basis(1).dimension(), 1); // constants only

    // Hermitian with q0 = 3: x has order 3, y has order 4, and the gaps
    // are exactly {1, 2, 5} (g = 3 of them).
    let herm = Curve::hermitian(f9, 3)?;
    show("hermitian", &herm, 8);
    let gaps: Vec<usize> = (1..=10).filter(|&n| !herm.is_pole_number(n)).collect();
    println!("hermitian gap orders up to 10: {gaps:?}");

    // For m ≥ 2g - 1 the dimension is exactly m + 1 - g.
    for m in 5..=10 {
        assert_eq!(herm.rr_basis(m).dimension(), m + 1 - herm.genus());
    }
    println!("dim L(m·P∞) = m + 1 - g verified for m = 5..=10 (g = 3)");
    Ok(())
}
