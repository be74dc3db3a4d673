//! Rational points, fibers, and the elliptic group law.
//!
//! Run with: cargo run --example curve_points

use agcodes::curves::{make_support, Curve, EcPoint, SupportRecipe};
use agcodes::gf::make_field;

fn main() -> agcodes::Result<()> {
    // y² = x³ - x + 4 over GF(19) has 23 rational points (22 affine + ∞),
    // and 23 is prime, so every point generates the whole group.
    let f = make_field(19, 1)?;
    let curve = Curve::elliptic(f.clone(), f.from_int(-1), f.from_int(4))?;
    println!(
        "GF(19), y² = x³ - x + 4: {} rational points",
        curve.point_count()
    );

    let base = EcPoint::Affine(f.from_int(0), f.from_int(2));
    let mut p = base;
    print!("multiples of (0, 2):");
    for _ in 1..=6 {
        if let EcPoint::Affine(x, y) = p {
            print!("  ({} : {})", f.fmt_el(x), f.fmt_el(y));
        }
        p = curve.ec_add(p, base)?;
    }
    println!();
    assert_eq!(
        curve.ec_scalar_mul(23, base)?,
        EcPoint::Infinity,
        "the group has order 23"
    );

    // y² = x³ + x over GF(9): 16 points. The three affine points with
    // y = 0 sit alone in their x-fibers; the other twelve come in pairs
    // (α, ±β) — exactly the "torsion-free" support the paired recipes use.
    let f9 = make_field(3, 2)?;
    let e9 = Curve::elliptic(f9.clone(), f9.from_int(1), f9.from_int(0))?;
    println!(
        "\nGF(9), y² = x³ + x: {} rational points",
        e9.point_count()
    );
    let all = make_support(&e9, &SupportRecipe::AllAffine)?;
    let paired = make_support(&e9, &SupportRecipe::CompleteFibers { take: None })?;
    println!(
        "all affine: {} points in {} fibers (complete: {})",
        all.len(),
        all.fibers().len(),
        all.fiber_complete()
    );
    println!(
        "paired only: {} points (complete: {})",
        paired.len(),
        paired.fiber_complete()
    );
    for fiber in paired.fibers().iter().take(3) {
        let members: Vec<String> = fiber
            .members
            .iter()
            .map(|&i| e9.fmt_point(&paired.points()[i]))
            .collect();
        println!("  fiber x = {}: {}", f9.fmt_el(fiber.alpha), members.join(", "));
    }

    // The Hermitian curve y³ + y = x⁴ over GF(9): every x-fiber has
    // exactly q0 = 3 points, 27 affine points + one place at infinity.
    let herm = Curve::hermitian(f9.clone(), 3)?;
    let hs = make_support(&herm, &SupportRecipe::CompleteFibers { take: Some(5) })?;
    println!(
        "\nGF(9), y³ + y = x⁴: {} rational points, genus {}",
        herm.point_count(),
        herm.genus()
    );
    println!(
        "first five fibers: {} points, fiber sizes {:?}",
        hs.len(),
        hs.fibers().iter().map(|f| f.members.len()).collect::<Vec<_>>()
    );
    Ok(())
}
