pub mod exactnum;
