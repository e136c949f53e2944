fn main() {
    std::process::exit(qhall::execute(std::env::args()));
}
