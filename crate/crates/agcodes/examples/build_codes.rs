//! Plain, extended, and Roth-Lempel generator matrices.
//!
//! The plain code evaluates L(m·P∞) at the support points. The extended
//! code appends one tag column holding the coefficient of the top basis
//! function; the Roth-Lempel code appends two (second-to-top, and
//! top-shifted-by-δ), which is what buys the better minimum distances.
//!
//! Run with: cargo run --example build_codes

use agcodes::codes::Code;
use agcodes::curves::{make_support, Curve, Point, SupportRecipe};
use agcodes::gf::{make_field, Fe};

fn main() -> agcodes::Result<()> {
    // A small projective-line case so the matrices are readable.
    let f = make_field(19, 1)?;
    let line = Curve::line(f.clone());
    let pts: Vec<Point> = [1i64, 2, 3, 5, 7, 11]
        .iter()
        .map(|&v| Point::on_line(f.from_int(v)))
        .collect();
    let support = agcodes::curves::Support::new(&line, &pts)?;

    let plain = Code::plain(line.clone(), support.clone(), 2)?;
    println!("plain m=2 on six points of the line:\n{:?}", plain.generator());

    let extended = Code::extended(line.clone(), support.clone(), 2)?;
    println!("extended (one tag column):\n{:?}", extended.generator());

    let rl = Code::roth_lempel(line.clone(), support.clone(), 2, f.from_int(7))?;
    println!("roth-lempel with δ = 7 (two tag columns):\n{:?}", rl.generator());
    assert_eq!((rl.n(), rl.k()), (8, 3));

    // The q = 19 elliptic instance: six multiples of (0, 2). Plain codes
    // accept every degree from 1 (a gap: the repetition code) to n - 1;
    // extended codes need m ≥ 2g so the tagged function exists.
    let curve = Curve::elliptic(f.clone(), f.from_int(-1), f.from_int(4))?;
    let base = Point::affine(f.from_int(0), f.from_int(2));
    let mult = make_support(&curve, &SupportRecipe::Multiples { base, count: 6 })?;
    for m in 1..=5 {
        let code = Code::plain(curve.clone(), mult.clone(), m)?;
        println!("plain elliptic m={m}: [{}, {}]", code.n(), code.k());
    }
    let ext = Code::extended(curve.clone(), mult.clone(), 4)?;
    println!(
        "extended elliptic m=4: [{}, {}], tag column = rows of f_k coefficient",
        ext.n(),
        ext.k()
    );

    // Precondition demo: roth-lempel needs pole orders m and m - 1 both
    // attained; on an elliptic curve m = 2 fails because 1 is a gap.
    let refused = Code::roth_lempel(curve, mult, 2, Fe::ZERO);
    println!("roth-lempel m=2 on an elliptic curve: {:?}", refused.err());
    Ok(())
}
