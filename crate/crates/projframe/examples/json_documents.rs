//! The JSON document layer used by the `projframe` binary: dumping built-in
//! datasets, validating documents on load, and keeping exact roots of unity
//! exact through a round trip.
//!
//! Run with `cargo run --example json_documents`.

use std::sync::Arc;

use projframe::json::{CocycleDoc, GroupDoc, IrreducibleSetDoc};
use projframe::numerics::ToleranceConfig;
use projframe::workspace::Workspace;

fn main() {
    let tol = ToleranceConfig::default();
    let ws = Workspace::with_builtins(tol);
    println!("built-in groups: {:?}", ws.group_names());
    println!("built-in cocycles: {:?}", ws.cocycle_names());

    // dump the Klein dataset the way `projframe examples klein` does
    let set = ws.irreducibles("klein:alpha").unwrap();
    let group_doc = GroupDoc::from_group(set.group());
    let cocycle_doc = CocycleDoc::from_cocycle(set.cocycle(), Some("klein"));
    let set_doc = IrreducibleSetDoc::from_set(&set);

    println!(
        "\ngroup document:\n{}",
        serde_json::to_string_pretty(&group_doc).unwrap()
    );
    let cocycle_text = serde_json::to_string(&cocycle_doc).unwrap();
    println!("\ncocycle document keeps exact roots: {}", &cocycle_text[..120.min(cocycle_text.len())]);

    // loaders validate: a corrupted table is rejected with a witness
    let mut corrupt = group_doc.clone();
    corrupt.mul_table[1][2] = 0;
    match corrupt.into_group() {
        Err(e) => println!("\ncorrupted group table rejected: {e}"),
        Ok(_) => unreachable!("validation must fail"),
    }

    // round trip: parse the dumps back and re-validate everything
    let group = Arc::new(
        serde_json::from_str::<GroupDoc>(&serde_json::to_string(&group_doc).unwrap())
            .unwrap()
            .into_group()
            .unwrap(),
    );
    let cocycle = Arc::new(
        serde_json::from_str::<CocycleDoc>(&cocycle_text)
            .unwrap()
            .into_cocycle(group, &tol)
            .unwrap(),
    );
    assert!(cocycle.is_exact());
    let rebuilt = serde_json::from_str::<IrreducibleSetDoc>(
        &serde_json::to_string(&set_doc).unwrap(),
    )
    .unwrap()
    .into_set(Arc::clone(&cocycle), &tol)
    .unwrap();
    let report = rebuilt.validate_complete(&tol).unwrap();
    println!(
        "\nreloaded irreducible set validates: sum d^2 = {}, worst coordinate defect {:.1e}",
        report.sum_of_dim_squares, report.max_coordinate_defect
    );

    // matrices reference their group and cocycle by name
    let matrix_json = r#"{
        "group": "klein",
        "cocycle": "alpha",
        "nu": [[1, 0], [2, 0], [3, 0], [4, 0]]
    }"#;
    let doc: projframe::json::MatrixDoc = serde_json::from_str(matrix_json).unwrap();
    let m = ws.load_matrix(doc).unwrap();
    println!(
        "\nmatrix document loads against the built-ins; det = {}",
        projframe::numerics::determinant_dense(&m.to_dense()).re
    );
}
