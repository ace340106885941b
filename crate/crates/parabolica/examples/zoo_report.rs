//! Render the full classification table for every model in the zoo,
//! with rigidity tags per geometric type.
//!
//! ```text
//! cargo run --release --example zoo_report
//! ```

use parabolica::model::GradedModel;
use parabolica::report::{render_markdown, verdicts};
use parabolica::zoo::Zoo;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zoo = Zoo::load()?;
    for entry in &zoo.models {
        let model = GradedModel::build(&entry.spec)?;
        let rows = verdicts(&model, entry.partner)?;
        print!("{}", render_markdown(&rows));
        println!();
    }
    Ok(())
}
