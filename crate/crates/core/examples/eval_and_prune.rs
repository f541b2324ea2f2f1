//! Evaluate a formula to its tree, then prune it to the minimal retract.

use adequate::{prune, Alphabet, Mode, SigmaTree};

fn main() -> Result<(), adequate::Error> {
    let alphabet = Alphabet::new("ab".chars())?;
    let text = std::env::args().nth(1).unwrap_or_else(|| "(a(b)+)+a(b)+(a)*".to_owned());
    let formula = adequate::parse(&text, &alphabet, Mode::ADEQUATE_MONOID)?;
    let tree = SigmaTree::evaluate(&formula, &alphabet)?;
    println!("formula   {text}");
    println!("unpruned  {}", tree.to_json());
    let witness = prune(&tree);
    println!("kept      {:?}", witness.kept);
    println!("pruned    {}", witness.tree.to_json());
    Ok(())
}
