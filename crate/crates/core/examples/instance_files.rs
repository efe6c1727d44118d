//! Writes an instance file in the `wcf-1` format, reads it back and reports on it.
//!
//! cargo run --example instance_files

use wcf::cli::{read_instance, InstanceDocument};
use wcf::random::{random_instance, substream};
use wcf::security_report;

fn main() -> wcf::Result<()> {
    let inst = random_instance(2, &mut substream(4, 0));
    let doc = InstanceDocument::from_instance(&inst);
    let path = std::env::temp_dir().join("wcf-example-instance.json");
    std::fs::write(&path, doc.to_json())?;
    println!("wrote {}:\n{}", path.display(), doc.to_json());

    let back = read_instance(&path)?;
    println!("{:#?}", security_report(&back)?);
    Ok(())
}
