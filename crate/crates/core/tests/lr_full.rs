//! Exhaustive interpolation check over all pairs of codes of length at most 3
//! with total weight at most 5. Takes several minutes in release mode:
//! `cargo test --release -p schubert-core --test lr_full -- --ignored`.

use schubert_core::combinatorics::codes_of_weight;
use schubert_core::lr::{lr_expand_product, lr_oracle_triangular};
use schubert_core::Code;

#[test]
#[ignore]
fn all_length_three_pairs() {
    let codes: Vec<Code> = (0..=5).flat_map(|w| codes_of_weight(w, 3)).collect();
    for u in &codes {
        for v in &codes {
            if u.weight() + v.weight() > 5 || u > v {
                continue;
            }
            let oracle = lr_oracle_triangular(u, v).unwrap();
            assert_eq!(lr_oracle_triangular(v, u).unwrap(), oracle);
            assert_eq!(lr_expand_product(u, v, oracle.len()).unwrap(), oracle, "{u} * {v}");
        }
    }
}
