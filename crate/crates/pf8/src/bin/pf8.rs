fn main() {
    println!("pf8");
}
