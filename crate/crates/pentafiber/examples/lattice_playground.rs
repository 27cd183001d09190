//! Divisor arithmetic from scratch: intersection numbers, canonical
//! classes, adjunction genus and proper transforms.
//!
//! ```bash
//! cargo run --example lattice_playground
//! ```

use pentafiber::lattice::SurfaceModel;

fn main() {
    // Plane curves: genus by adjunction matches (d-1)(d-2)/2.
    let plane = SurfaceModel::plane();
    for d in [1, 3, 5, 6] {
        let class = plane.class(vec![d]).unwrap();
        println!(
            "degree {d} plane curve: self-intersection {}, genus {}",
            plane.pairing(&class, &class).unwrap(),
            plane.arithmetic_genus(&class).unwrap()
        );
    }

    // Hirzebruch surfaces: the negative section and the ruling fiber.
    let f3 = SurfaceModel::hirzebruch(3).unwrap();
    let section = f3.class(vec![1, 0]).unwrap();
    let fiber = f3.class(vec![0, 1]).unwrap();
    println!(
        "\nF_3: D^2 = {}, D.G = {}, G^2 = {}, K = {}",
        f3.pairing(&section, &section).unwrap(),
        f3.pairing(&section, &fiber).unwrap(),
        f3.pairing(&fiber, &fiber).unwrap(),
        f3.format_class(&f3.canonical_class())
    );

    // Blow up the plane 33 times and resolve a sextic with one double point:
    // the transform squares to zero and drops to genus 9.
    let blown = SurfaceModel::plane().blown_up(33);
    let sextic = plane.class(vec![6]).unwrap();
    let mut schedule = vec![2];
    schedule.extend(std::iter::repeat_n(1, 32));
    let resolved = blown.proper_transform(&sextic, &schedule).unwrap();
    println!(
        "\nresolved sextic pencil: {}",
        blown.format_class(&resolved)
    );
    println!(
        "self-intersection {}, genus {}, ambient K^2 {}",
        blown.pairing(&resolved, &resolved).unwrap(),
        blown.arithmetic_genus(&resolved).unwrap(),
        blown.canonical_square().unwrap()
    );
}
