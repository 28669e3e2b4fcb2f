//! Runs every example except `write_problems`, which rewrites `problems/`.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));

            #[test]
            fn runs() {
                main().unwrap();
            }
        }
    };
}

example!(radical);
example!(decomposition);
example!(splitting);
example!(exponent);
example!(lie_exponent);
example!(codimension);
example!(graded_duality);
example!(identities);
example!(cocharacter);
example!(problem_file);
