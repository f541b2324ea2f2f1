//! Decide equality of formulas in the free adequate monoid.
//!
//! cargo run --example word_problem -- "(x)+x" "x"

use adequate::{Alphabet, Mode, Solver};

fn main() -> Result<(), adequate::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [l, r] => vec![(l.clone(), r.clone())],
        _ => [("(x)+x", "x"), ("x(x)*", "x"), ("(x)+", "(x)*"), ("xy", "yx"), ("(xy)+", "(x(y)+)+")]
            .iter()
            .map(|&(l, r)| (l.to_owned(), r.to_owned()))
            .collect(),
    };
    for (lhs, rhs) in pairs {
        let alphabet = Alphabet::from_texts([lhs.as_str(), rhs.as_str()])?;
        let solver = Solver::new(alphabet, Mode::ADEQUATE_MONOID);
        let verdict = if solver.equal_str(&lhs, &rhs)? { "=" } else { "!=" };
        println!("{lhs} {verdict} {rhs}");
    }
    Ok(())
}
