fn main() {
    std::process::exit(convexity_radii::cli::run());
}
