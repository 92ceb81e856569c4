use std::path::PathBuf;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cache_dir = std::env::var_os("SUPERSCHUR_CACHE_DIR")
        .filter(|value| !value.is_empty())
        .map(PathBuf::from);
    let code = superschur::cli::execute(&args, cache_dir, &mut std::io::stdout());
    std::process::exit(code);
}
