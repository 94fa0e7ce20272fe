pub mod brauer;
pub mod chartab;
pub mod cli;
pub mod exact;
pub mod gfla;
pub mod mtxcond;
pub mod permgrp;
