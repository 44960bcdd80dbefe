# Ring expression language and command line
