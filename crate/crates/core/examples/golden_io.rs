//! Writing the built-in examples as JSON and reading them back.

use spheremotion::golden::{example2_motion, fig1_map};
use spheremotion::io::{from_json, golden_files, to_json, MapDoc, MotionDoc, GOLDEN_NAMES};

fn main() -> spheremotion::error::Result<()> {
    for name in GOLDEN_NAMES {
        let files: Vec<String> = golden_files(name)?.into_iter().map(|(f, _)| f).collect();
        println!("{name}: {}", files.join(", "));
    }
    let map = fig1_map();
    let text = to_json(&MotionDoc::from_motion(&map, &example2_motion()));
    let back = from_json::<MotionDoc>(&text)?.to_motion(&map)?;
    println!("motion round trip: {}", back == example2_motion());
    let doc: MapDoc = from_json(&to_json(&MapDoc::from_map(&map)))?;
    println!("map round trip: {}", doc.to_map()? == map);
    Ok(())
}
