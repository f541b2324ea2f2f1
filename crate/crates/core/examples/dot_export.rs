//! Write a tree as Graphviz DOT.
//!
//! cargo run --example dot_export -- "(a(b)*)+a" > tree.dot && dot -Tpng tree.dot -o tree.png

use adequate::{Alphabet, Mode, Solver};

fn main() -> Result<(), adequate::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(a(b)*)+a(b)+".to_owned());
    let solver = Solver::new(Alphabet::from_texts([text.as_str()])?, Mode::ADEQUATE_MONOID);
    let tree = solver.element(&solver.parse(&text)?)?;
    print!("{}", tree.to_dot());
    Ok(())
}
