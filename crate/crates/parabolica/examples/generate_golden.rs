//! Recompute the golden profile of every zoo model and print it as JSON.
//!
//! Redirect the output to `data/golden.json` to refreeze after an
//! intentional change:
//!
//! ```text
//! cargo run --release --example generate_golden > crates/parabolica/data/golden.json
//! ```

use parabolica::zoo::{compute_golden, Golden, Zoo};
use std::collections::BTreeMap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zoo = Zoo::load()?;
    let mut models = BTreeMap::new();
    for entry in &zoo.models {
        let model = parabolica::model::GradedModel::build(&entry.spec)?;
        eprintln!("profiling {} ...", model.id());
        models.insert(model.id(), compute_golden(&model)?);
    }
    let golden = Golden { version: 1, models };
    println!("{}", serde_json::to_string_pretty(&golden)?);
    Ok(())
}
