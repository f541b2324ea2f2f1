//! Print normal forms, which are the canonical formulas of pruned trees.

use adequate::{Alphabet, Mode, Solver};

fn main() -> Result<(), adequate::Error> {
    let solver = Solver::new(Alphabet::new("ab".chars())?, Mode::ADEQUATE_MONOID);
    for f in ["(b)+(a)+", "(a)+a", "a(a)*(a)*", "((a)+b)+", "(ab)+(ab)+", "(b)*a(b)+(a)*"] {
        let nf = solver.normal_form_str(f)?;
        println!("{f:>16}  ->  {nf}");
        assert_eq!(solver.normal_form_str(&nf)?, nf);
    }
    Ok(())
}
