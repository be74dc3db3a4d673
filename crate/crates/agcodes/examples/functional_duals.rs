//! Dual generators built from functions instead of kernel computations.
//!
//! Over a fiber-complete support, the dual of an extended or Roth-Lempel
//! code is again an evaluation code: rows evaluate u/w for a graded
//! numerator basis u and a fixed separating denominator w (h′ on the
//! line and the Hermitian curve, y·h′ on elliptic curves), with the tag
//! entries carrying correction constants λ. The λ values land on closed
//! forms — 1 on the line, 2 on elliptic curves, 1 on Hermitian curves —
//! and the result always equals the nullspace dual as a row space.
//!
//! Run with: cargo run --example functional_duals

use agcodes::codes::{functional_dual, nullspace_dual, Code};
use agcodes::curves::{make_support, Curve, Point, Support, SupportRecipe};
use agcodes::gf::make_field;

fn main() -> agcodes::Result<()> {
    // Projective line, four points, extended m=2: λ = 1.
    let f = make_field(19, 1)?;
    let line = Curve::line(f.clone());
    let pts: Vec<Point> = (1..=4).map(|v| Point::on_line(f.from_int(v))).collect();
    let support = Support::new(&line, &pts)?;
    let code = Code::extended(line, support, 2)?;
    let dual = functional_dual(&code)?;
    println!(
        "line, extended m=2: λ = {}, dual generator:\n{:?}",
        f.fmt_el(dual.lambdas[0]),
        dual.generator
    );

    // Elliptic, the 12-point paired support over GF(9), m=9: λ = 2.
    let f9 = make_field(3, 2)?;
    let curve = Curve::elliptic(f9.clone(), f9.from_int(1), f9.from_int(0))?;
    let paired = make_support(&curve, &SupportRecipe::CompleteFibers { take: None })?;
    let code = Code::extended(curve.clone(), paired.clone(), 9)?;
    let dual = functional_dual(&code)?;
    println!(
        "\nelliptic [13, 9] extended: λ = {}, dual is [{}, {}]",
        f9.fmt_el(dual.lambdas[0]),
        dual.generator.cols(),
        dual.generator.rows(),
    );
    assert!(dual.generator.same_row_space(&nullspace_dual(&code)));
    println!("functional dual spans exactly the kernel of the generator");

    // The same construction refuses supports with incomplete fibers:
    // the denominator needs every fiber of h to be fully present.
    let all15 = make_support(&curve, &SupportRecipe::AllAffine)?;
    let refused = functional_dual(&Code::extended(curve.clone(), all15, 9)?);
    println!("15-point support (y = 0 fibers incomplete): {:?}", refused.err());

    // Roth-Lempel duals carry three constants λ1, λ2, λ3; λ2 is always
    // invertible, which is what makes the two tag columns independent.
    let rl = Code::roth_lempel(curve, paired, 9, f9.theta())?;
    let dual = functional_dual(&rl)?;
    let rendered: Vec<String> = dual.lambdas.iter().map(|&l| f9.fmt_el(l)).collect();
    println!(
        "\nroth-lempel δ = θ: (λ1, λ2, λ3) = ({})",
        rendered.join(", ")
    );
    assert!(!dual.lambdas[1].is_zero());

    // Hermitian, five full fibers, extended m=6: λ = 1.
    let herm = Curve::hermitian(f9.clone(), 3)?;
    let hs = make_support(&herm, &SupportRecipe::CompleteFibers { take: Some(5) })?;
    let code = Code::extended(herm, hs, 6)?;
    let dual = functional_dual(&code)?;
    println!(
        "\nhermitian [16, 4] extended: λ = {}, dual is [{}, {}]",
        f9.fmt_el(dual.lambdas[0]),
        dual.generator.cols(),
        dual.generator.rows()
    );
    Ok(())
}
