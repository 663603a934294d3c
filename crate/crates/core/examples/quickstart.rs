use hta_core::laws::{check, Law};
use hta_core::operad::quotient_dim;
use hta_core::product::{chain_table, s_k};
use hta_core::random::random_tensor;
use hta_core::{mu_chain, ProductSpec};

fn main() -> hta_core::Result<()> {
    // μ(φ1, φ2, φ3) = φ1 ∘ φ̃2 ∘ φ3 on (2,1) tensors over a 2-dimensional space
    let args: Vec<_> = (0..3).map(|seed| random_tensor(2, 1, 2, seed, 5)).collect();
    let product = mu_chain(&ProductSpec::ltr(1), &args)?;
    println!("{}", hta_core::json::tensor_to_json(&product));

    // the same product on 2x2 matrices, as a structure table, checked exhaustively
    let table = chain_table(&ProductSpec::ltr(1), 1, 1, 2)?;
    let report = check(&table, &Law::sigma_total(s_k(1)))?;
    println!("tau13-total: {}", report.holds);

    println!("dim P(5) = {}", quotient_dim(5)?);
    Ok(())
}
