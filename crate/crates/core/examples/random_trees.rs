//! Generate random trees from Prüfer sequences and show that the canonical
//! formula ignores vertex numbering.

use adequate::generate::{random_relabelling, random_tree, rng_from_seed};
use adequate::{canonical_string, prune, Alphabet};

fn main() {
    let alphabet = Alphabet::new("abc".chars()).unwrap();
    let mut rng = rng_from_seed(7);
    for edges in [3, 8, 20] {
        let t = random_tree(&mut rng, &alphabet, edges);
        let shuffled = random_relabelling(&mut rng, &t);
        let sigma = canonical_string(&t);
        assert_eq!(sigma, canonical_string(&shuffled));
        let pruned = prune(&t).tree;
        println!("{edges:>3} edges: {sigma}");
        println!("     pruned ({} edges): {}", pruned.edge_count(), canonical_string(&pruned));
    }
}
