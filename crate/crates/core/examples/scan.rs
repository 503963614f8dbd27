//! Prints every accepted family and every rejection.

fn main() {
    let e = index2_core::enumerator::scan().expect("scan");
    for f in &e.families {
        let r = &f.record;
        let planar = r.planar_lambda.as_ref().map(|l| format!(" planar at λ = {l}")).unwrap_or_default();
        let generator = r.generator.as_deref().unwrap_or("---");
        println!("{:<10} {:<10} {:?} {generator}{planar}", r.family_id, r.schlafli_type, r.face_vector);
    }
    for r in &e.rejections {
        let shape = r.shape.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        println!("rejected {:<6} {:<8} {}: {}", r.configuration, shape, r.reason, r.detail);
    }
}
