pub mod random_maps;
