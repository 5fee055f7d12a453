// Generate the benchmark distributions and round-trip a point file.

use delaunay_hierarchy::datasets::{generate, read_points, write_points, DatasetKind, DatasetSpec};

fn main() {
    for kind in DatasetKind::ALL {
        let pts = generate(&DatasetSpec::new(kind, 1000, 1));
        let (xs, ys): (Vec<i32>, Vec<i32>) = pts.iter().map(|p| (p.x, p.y)).unzip();
        println!(
            "{kind:>9}: {} points, x in [{}, {}], y in [{}, {}]",
            pts.len(),
            xs.iter().min().unwrap(),
            xs.iter().max().unwrap(),
            ys.iter().min().unwrap(),
            ys.iter().max().unwrap()
        );
    }

    let pts = generate(&DatasetSpec::new(DatasetKind::Parabola, 10, 2));
    let mut file = Vec::new();
    write_points(&mut file, &pts).unwrap();
    assert_eq!(read_points(file.as_slice()).unwrap(), pts);
    print!("{}", String::from_utf8(file).unwrap());
}
