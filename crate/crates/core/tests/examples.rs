// Runs every example so they stay in sync with the library.

mod build_triangulation {
    include!("../examples/build_triangulation.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod nearest_neighbor {
    include!("../examples/nearest_neighbor.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod dynamic_updates {
    include!("../examples/dynamic_updates.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod locate_trace {
    include!("../examples/locate_trace.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod datasets {
    include!("../examples/datasets.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod cost_model {
    include!("../examples/cost_model.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod compare_methods {
    include!("../examples/compare_methods.rs");

    #[test]
    fn runs() {
        main();
    }
}
