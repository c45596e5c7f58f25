package com.example.zoo;

import java.util.HashMap;
import java.util.Map;

public final class Util {

    private static Map<String, Map<String, Integer>> nested = new HashMap<>();

    public static <T extends Comparable<? super T>> T max(java.util.List<T> items) {
        return java.util.Collections.max(items);
    }

    public static int[] histogram(int[] values, int bins) {
        return new int[bins];
    }
}
