use index2_core::enumerator::scan;
use index2_core::export::{read_json_table, render_table, TableFormat, TABLE_SCHEMA};

#[test]
fn json_table_validates_and_round_trips() {
    let records = scan().unwrap().records();
    let text = render_table(&records, TableFormat::Json).unwrap();
    let schema: serde_json::Value = serde_json::from_str(TABLE_SCHEMA).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    assert!(validator.is_valid(&doc));

    let rows = read_json_table(&text).unwrap();
    assert_eq!(rows.len(), 22);
    let again = render_table(&records, TableFormat::Json).unwrap();
    assert_eq!(text, again);

    let mut broken = doc.clone();
    broken["families"][0]["face_vector"] = serde_json::json!([1, 2]);
    assert!(!validator.is_valid(&broken));
}

#[test]
fn csv_and_markdown_agree() {
    let records = scan().unwrap().records();
    let csv = render_table(&records, TableFormat::Csv).unwrap();
    let md = render_table(&records, TableFormat::Markdown).unwrap();
    assert_eq!(csv.lines().count(), 23);
    assert_eq!(md.lines().count(), 24);
    let planar: Vec<&str> = csv.lines().filter(|l| l.contains('√')).collect();
    assert_eq!(planar.len(), 2);
    assert!(md.contains("| {4,5}_6 | --- |"));
}
